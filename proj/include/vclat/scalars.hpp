// SPDX-License-Identifier: MIT
/**
 * @file scalars.hpp
 * @brief Exact scalar types (arbitrary-precision integers and rationals) and
 *        the Eigen traits needed to use them inside dense matrices.
 *
 * Every quantity this library manipulates is exact: `Int` is an
 * arbitrary-precision integer and `Rat` an arbitrary-precision rational.
 * No floating point appears anywhere in the computational modules, so all
 * equalities asserted by the verification suites are genuine identities.
 */
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

namespace vclat {

using Int = mpz_class;
using Rat = mpq_class;

/// Reduced rational num/den.  (The raw two-argument mpq_class constructor
/// stores the pair without cancelling the gcd, so always build through this.)
inline Rat ratio(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Floor of sqrt(n) for n >= 0.  Throws std::invalid_argument for n < 0.
Int isqrt_floor(const Int& n);

/// True iff n is a perfect square; the root is written through *root if given.
bool is_square(const Int& n, Int* root = nullptr);

/// Largest integer t with t*t <= p/q, for p >= 0, q > 0.
Int sqrt_floor_of_ratio(const Int& p, const Int& q);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace vclat

namespace Eigen {

/// Traits wiring mpz_class into Eigen's dense expression machinery.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50,
  };
};

/// Traits wiring mpq_class into Eigen's dense expression machinery.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
};

}  // namespace Eigen
