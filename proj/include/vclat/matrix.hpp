// SPDX-License-Identifier: MIT
/**
 * @file matrix.hpp
 * @brief Dense exact matrices (Eigen with arbitrary-precision scalars) and
 *        fraction-free / rational elimination helpers.
 */
#pragma once

#include "vclat/scalars.hpp"

#include <Eigen/Core>

namespace vclat {

using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

MatQ to_rational(const MatZ& m);
VecQ to_rational(const VecZ& v);

bool is_symmetric(const MatZ& m);

/// Exact determinant by Bareiss fraction-free elimination.
Int det_exact(const MatZ& m);

/// Exact determinant by rational Gaussian elimination.
Rat det_exact(const MatQ& m);

/// Exact inverse by Gauss–Jordan elimination; throws on a singular matrix.
MatQ inverse_exact(const MatQ& m);
inline MatQ inverse_exact(const MatZ& m) { return inverse_exact(to_rational(m)); }

/// Unique solution of A x = b; throws if A is singular.
VecQ solve_exact(const MatQ& a, const VecQ& b);

/// Rank over the rationals.
long rank_exact(const MatQ& m);
inline long rank_exact(const MatZ& m) { return rank_exact(to_rational(m)); }

/// True iff every entry has denominator 1; integer part through *out if given.
bool is_integral(const MatQ& m, MatZ* out = nullptr);
bool is_integral(const VecQ& v, VecZ* out = nullptr);

/// Lexicographic comparison of coordinate vectors (entry by entry).
bool lex_less(const VecZ& a, const VecZ& b);

}  // namespace vclat
