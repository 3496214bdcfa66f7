// SPDX-License-Identifier: MIT
/**
 * @file lattice.hpp
 * @brief Integral lattices with exact arithmetic: Smith normal form,
 *        discriminant groups, dual bases, short-vector enumeration,
 *        saturation tests, isometry search, and binary quadratic forms.
 */
#pragma once

#include "vclat/matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vclat {

/// Result of Smith normal form: unimodular U, V with U * M * V = D, where D
/// is diagonal with non-negative entries d1 | d2 | ... .
struct SmithResult {
  MatZ d;
  MatZ u;
  MatZ v;

  /// Diagonal of D, padded over min(rows, cols) entries (zeros included).
  std::vector<Int> invariant_factors() const;
};

SmithResult smith_normal_form(const MatZ& m);

/**
 * A lattice described by a symmetric integral Gram matrix.  Degenerate
 * (singular) Gram matrices are rejected at construction, so every
 * GramLattice has a well-defined discriminant group.
 */
class GramLattice {
 public:
  explicit GramLattice(MatZ gram, std::vector<std::string> labels = {});

  long rank() const { return gram_.rows(); }
  const MatZ& gram() const { return gram_; }
  const Int& det() const { return det_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// True iff every diagonal entry is even (all vectors then have even norm).
  bool is_even() const;
  /// Sylvester test: all leading principal minors positive.
  bool is_positive_definite() const;

  Int norm(const VecZ& x) const;
  Int inner(const VecZ& x, const VecZ& y) const;

 private:
  MatZ gram_;
  Int det_;
  std::vector<std::string> labels_;
};

/// Finite abelian group L*/L presented by invariant factors d1 | d2 | ... .
struct DiscGroup {
  /// All Smith invariant factors of the Gram matrix (trivial ones included);
  /// their product is |det|.
  std::vector<Int> invariant_factors;
  /// One generator per invariant factor, as integer coordinate rows in the
  /// dual basis; the row for factor d has order d in L*/L.
  MatZ generators;

  Int order() const;
  std::vector<Int> nontrivial_factors() const;
  bool cyclic() const;
};

DiscGroup discriminant_group(const GramLattice& lat);

/// Rows are the dual basis vectors in rational coordinates on the original
/// basis, so gram * dual^T = identity.
MatQ dual_basis(const GramLattice& lat);

/// A tuple of lattice vectors given by integer coordinate rows in a fixed
/// ambient lattice.
struct AmbientVectors {
  GramLattice ambient;
  MatZ vectors;  // one row per vector, ambient.rank() columns

  AmbientVectors(GramLattice amb, MatZ vecs);

  /// Gram matrix the rows induce: vectors * ambient.gram * vectors^T.
  MatZ induced_gram() const;
};

/**
 * True iff the subgroup spanned by the rows is saturated in the ambient
 * lattice (no further ambient vector has a multiple inside the span), which
 * holds exactly when every Smith invariant factor of the coordinate matrix
 * is 1.  Throws std::invalid_argument("dependent vectors") if the rows are
 * linearly dependent.
 */
bool is_saturated(const AmbientVectors& sub);

/**
 * All vectors of the given norm in a positive-definite lattice (both signs),
 * sorted lexicographically.  Bounds come from an exact fraction-free
 * LDL^T completion of squares; no floating point is involved.
 * Throws std::invalid_argument("enumeration requires positive definite").
 */
std::vector<VecZ> vectors_of_norm(const GramLattice& lat, const Int& n);

/**
 * Deterministic witness of a vector of norm n, if one exists: the
 * lexicographically least among sign-normalised representatives (first
 * non-zero coordinate positive).
 */
std::optional<VecZ> has_vector_of_norm(const GramLattice& lat, const Int& n);

/**
 * Searches for an integral change of basis T with T^T * G1 * T = G2.
 * Supported: positive-definite lattices of rank <= 3 (otherwise throws
 * std::invalid_argument("out of supported range")).  Returns the first
 * transform in a deterministic candidate order, or nullopt.
 */
std::optional<MatZ> isometry_exists(const GramLattice& g1, const GramLattice& g2);

/// Integral binary quadratic form a x^2 + b x y + c y^2.
struct BinaryForm {
  Int a, b, c;

  Int eval(const Int& x, const Int& y) const;
  /// b^2 - 4ac (negative for definite forms).
  Int disc() const;
  bool positive_definite() const;
};

/**
 * First representation of n by a positive-definite form, scanning y = 0, 1,
 * 2, ... and for each y ordering the roots by |x| with positive x first.
 * Throws std::invalid_argument("indefinite form") unless positive definite.
 */
std::optional<std::pair<Int, Int>> represents(const BinaryForm& f, const Int& n);

/// As represents(), but only witnesses with gcd(x, y) = 1 qualify.
std::optional<std::pair<Int, Int>> represents_primitive(const BinaryForm& f, const Int& n);

// --- Named lattices -------------------------------------------------------

/// The positive-definite even rank-8 lattice of determinant 1.
GramLattice e8_lattice();

/// The even rank-2 lattice with Gram ((0,1),(1,0)).
GramLattice hyperbolic_plane();

/**
 * The odd unimodular lattice of signature (21, 2) carried by the middle
 * cohomology of a cubic fourfold, realised as E8 + E8 + U + U + <1>^3.
 * Coordinates 0-7 and 8-15 are the two E8 blocks, 16-17 and 18-19 the two
 * hyperbolic planes, 20-22 the three unit vectors.
 */
GramLattice middle_cohomology_lattice();

/// The square of the hyperplane class in middle_cohomology_lattice()
/// coordinates: the sum of the three unit vectors.
VecZ hyperplane_square_vector();

}  // namespace vclat
