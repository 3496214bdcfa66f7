// SPDX-License-Identifier: MIT
/**
 * @file cremona.cpp
 * @brief Cofactor quadrics, the composition identity, and the marked-Gram
 *        transformation law.
 */
#include "vclat/cremona.hpp"

#include <stdexcept>

namespace vclat {

namespace {

/// Variable index sitting at entry (i, j) of the symmetric matrix.
constexpr int kPlacement[3][3] = {{0, 1, 5}, {1, 2, 3}, {5, 3, 4}};

}  // namespace

PolyMat3 veronese_coordinate_matrix() {
  PolyMat3 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          SparsePoly::variable(kPlacement[i][j]);
    }
  }
  return m;
}

SparsePoly det3(const PolyMat3& m) {
  SparsePoly out;
  out = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return out;
}

PolyMat3 adjugate(const PolyMat3& m) {
  PolyMat3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // Cofactor expansion: adj(M)(i, j) = (-1)^{i+j} * minor(j, i).
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      // Using cyclic complements keeps the sign positive automatically:
      // minor rows (j+1, j+2) and columns (i+1, i+2) taken cyclically.
      out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          m[static_cast<size_t>(r0)][static_cast<size_t>(c0)] *
              m[static_cast<size_t>(r1)][static_cast<size_t>(c1)] -
          m[static_cast<size_t>(r0)][static_cast<size_t>(c1)] *
              m[static_cast<size_t>(r1)][static_cast<size_t>(c0)];
    }
  }
  return out;
}

std::array<SparsePoly, 6> cofactor_quadrics(const PolyMat3& m) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!(m[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
            m[static_cast<size_t>(j)][static_cast<size_t>(i)])) {
        throw std::invalid_argument("cofactor quadrics require a symmetric matrix");
      }
    }
  }
  const PolyMat3 adj = adjugate(m);
  std::array<SparsePoly, 6> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      out[static_cast<size_t>(kPlacement[i][j])] =
          adj[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }
  return out;
}

bool involution_check() {
  const PolyMat3 m = veronese_coordinate_matrix();
  const std::array<SparsePoly, 6> q = cofactor_quadrics(m);
  const SparsePoly det = det3(m);

  for (int k = 0; k < 6; ++k) {
    const SparsePoly& qk = q[static_cast<size_t>(k)];
    if (!qk.is_homogeneous() || qk.degree() != 2) {
      throw std::logic_error("cofactor entry is not a quadric");
    }
  }

  std::array<SparsePoly, kPolyVars> repl;
  for (int k = 0; k < 6; ++k) repl[static_cast<size_t>(k)] = q[static_cast<size_t>(k)];

  for (int k = 0; k < 6; ++k) {
    const SparsePoly composite = q[static_cast<size_t>(k)].substitute(repl);
    if (!composite.is_homogeneous() || composite.degree() != 4) {
      throw std::logic_error("composite is not homogeneous of degree 4");
    }
    const SparsePoly expected = det * SparsePoly::variable(k);
    if (!(composite == expected)) {
      throw std::logic_error("composition identity fails");
    }
  }
  return true;
}

MarkedGram::MarkedGram(MatZ gram) : gram_(std::move(gram)) {
  if (gram_.rows() != 3 || gram_.cols() != 3 || !is_symmetric(gram_) || gram_(0, 0) != 3 ||
      gram_(0, 1) != 4 || gram_(1, 1) != 12) {
    throw std::invalid_argument("not in Veronese frame");
  }
}

const std::array<const char*, 3>& MarkedGram::labels() {
  static const std::array<const char*, 3> names{"h2", "v", "s"};
  return names;
}

MarkedGram cremona_gram_image(const MarkedGram& g) {
  const Int a = g.a(), b = g.b(), c = g.c();
  MatZ out(3, 3);
  const Int a2 = 4 * a - b;
  const Int c2 = c + (3 * a - b) * (3 * a - b);
  out << 3, 4, a2,  //
      4, 12, b,     //
      a2, b, c2;
  return MarkedGram(out);
}

bool gram_image_involutive(const MarkedGram& g) {
  const MarkedGram once = cremona_gram_image(g);
  const MarkedGram twice = cremona_gram_image(once);
  if (det_exact(twice.gram()) != det_exact(g.gram())) return false;
  // The double image is the original lattice seen in a different marked
  // basis, so an abstract isometry must exist.
  const GramLattice l1(g.gram());
  const GramLattice l2(twice.gram());
  if (!l1.is_positive_definite() || !l2.is_positive_definite()) {
    throw std::invalid_argument("out of supported range");
  }
  return isometry_exists(l1, l2).has_value();
}

}  // namespace vclat
