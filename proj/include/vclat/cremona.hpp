// SPDX-License-Identifier: MIT
/**
 * @file cremona.hpp
 * @brief The cubo-cubic Cremona transformation defined by the quadrics
 *        through a Veronese surface: its defining polynomial identities
 *        and the induced transformation law on marked rank-3 Gram
 *        matrices.
 *
 * The six ambient coordinates are arranged as the entries of a symmetric
 * 3x3 matrix; the transformation sends a point to the six 2x2 cofactors of
 * that matrix.  Composing the transformation with itself multiplies the
 * coordinates by the determinant, which is the defining identity checked
 * by involution_check().
 */
#pragma once

#include "vclat/lattice.hpp"
#include "vclat/poly.hpp"

#include <array>

namespace vclat {

using PolyMat3 = std::array<std::array<SparsePoly, 3>, 3>;

/**
 * The symmetric matrix of coordinates.  Placement of variable k:
 * (0,0)->0, (0,1)->1, (0,2)->5, (1,1)->2, (1,2)->3, (2,2)->4.
 */
PolyMat3 veronese_coordinate_matrix();

SparsePoly det3(const PolyMat3& m);

/// Adjugate (transposed cofactor matrix); symmetric for symmetric input.
PolyMat3 adjugate(const PolyMat3& m);

/**
 * The six cofactor quadrics of a symmetric polynomial matrix, read off the
 * adjugate at the same placement as veronese_coordinate_matrix().
 * Throws std::invalid_argument if the matrix is not symmetric.
 */
std::array<SparsePoly, 6> cofactor_quadrics(const PolyMat3& m);

/**
 * Verifies the defining identity of the transformation: substituting the
 * six quadrics into themselves yields det * coordinate, entrywise, with
 * every composite of homogeneous degree 4.  Returns true; throws
 * std::logic_error on any mismatch.
 */
bool involution_check();

/**
 * A rank-3 Gram matrix marked by the basis (h^2, v, s) of a sublattice of
 * the middle cohomology of a cubic through a Veronese surface: the upper
 * left 2x2 block is fixed at ((3,4),(4,12)).
 */
class MarkedGram {
 public:
  explicit MarkedGram(MatZ gram);

  const MatZ& gram() const { return gram_; }
  Int a() const { return gram_(0, 2); }  ///< pairing of h^2 with s
  Int b() const { return gram_(1, 2); }  ///< pairing of v with s
  Int c() const { return gram_(2, 2); }  ///< norm of s

  static const std::array<const char*, 3>& labels();

 private:
  MatZ gram_;
};

/**
 * Image of a marked Gram matrix under the transformation:
 * (A, B, C) -> (4A - B, B, C + (3A - B)^2) on the marked entries.
 * The determinant is preserved.
 */
MarkedGram cremona_gram_image(const MarkedGram& g);

/**
 * Applying the image map twice yields a lattice isometric to the original
 * with equal determinant; returns true when both checks pass.
 */
bool gram_image_involutive(const MarkedGram& g);

}  // namespace vclat
