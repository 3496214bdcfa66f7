// SPDX-License-Identifier: MIT
/**
 * @file test_cremona.cpp
 * @brief The symbolic involution and the induced law on marked Gram
 *        matrices.
 */
#include <doctest.h>

#include <random>

#include "vclat/chow.hpp"
#include "vclat/cremona.hpp"
#include "vclat/matrix.hpp"

using namespace vclat;

namespace {

SparsePoly x(int i) { return SparsePoly::variable(i); }

MarkedGram marked(long a, long b, long c) {
  MatZ g(3, 3);
  g << 3, 4, a, 4, 12, b, a, b, c;
  return MarkedGram(g);
}

}  // namespace

TEST_CASE("coordinate matrix of the Veronese surface") {
  const PolyMat3 m = veronese_coordinate_matrix();
  CHECK(m[0][0] == x(0));
  CHECK(m[0][1] == x(1));
  CHECK(m[0][2] == x(5));
  CHECK(m[1][1] == x(2));
  CHECK(m[1][2] == x(3));
  CHECK(m[2][2] == x(4));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(m[i][j] == m[j][i]);
  }
  CHECK(det3(m).is_homogeneous());
  CHECK(det3(m).degree() == 3);
}

TEST_CASE("adjugate identity M * adj(M) = det(M) * I") {
  const PolyMat3 m = veronese_coordinate_matrix();
  const PolyMat3 a = adjugate(m);
  const SparsePoly det = det3(m);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      SparsePoly entry;
      for (int k = 0; k < 3; ++k) entry = entry + m[i][k] * a[k][j];
      CHECK(entry == (i == j ? det : SparsePoly()));
    }
  }
}

TEST_CASE("cofactor quadrics of a diagonal matrix") {
  PolyMat3 diag;
  diag[0][0] = x(0);
  diag[1][1] = x(2);
  diag[2][2] = x(4);
  const auto q = cofactor_quadrics(diag);
  CHECK(q[0] == x(2) * x(4));
  CHECK(q[1].is_zero());
  CHECK(q[2] == x(0) * x(4));
  CHECK(q[3].is_zero());
  CHECK(q[4] == x(0) * x(2));
  CHECK(q[5].is_zero());

  PolyMat3 asym;
  asym[0][1] = x(1);
  CHECK_THROWS_WITH_AS(cofactor_quadrics(asym),
                       "cofactor quadrics require a symmetric matrix",
                       std::invalid_argument);
}

TEST_CASE("the six quadrics compose to det times the coordinates") {
  CHECK(involution_check());

  // Direct spot check of one coordinate.
  const PolyMat3 m = veronese_coordinate_matrix();
  const auto q = cofactor_quadrics(m);
  std::array<SparsePoly, kPolyVars> repl{q[0], q[1], q[2], q[3], q[4], q[5]};
  CHECK(q[0].substitute(repl) == det3(m) * x(0));
}

TEST_CASE("marked Gram validation") {
  CHECK(MarkedGram::labels() == std::array<const char*, 3>{"h2", "v", "s"});
  MatZ wrong(3, 3);
  wrong << 3, 5, 0, 5, 12, 0, 0, 0, 1;
  CHECK_THROWS_WITH_AS((void)MarkedGram(wrong), "not in Veronese frame", std::invalid_argument);
  const MarkedGram g = marked(1, 1, 9);
  CHECK(g.a() == 1);
  CHECK(g.b() == 1);
  CHECK(g.c() == 9);
}

TEST_CASE("transformation law on marked entries") {
  const MarkedGram img1 = cremona_gram_image(marked(1, 1, 9));
  CHECK(img1.a() == 3);
  CHECK(img1.b() == 1);
  CHECK(img1.c() == 13);

  const MarkedGram img2 = cremona_gram_image(marked(1, -1, 13));
  CHECK(img2.a() == 5);
  CHECK(img2.b() == -1);
  CHECK(img2.c() == 29);

  const MarkedGram img3 = cremona_gram_image(marked(0, 1, 14));
  CHECK(img3.a() == -1);
  CHECK(img3.b() == 1);
  CHECK(img3.c() == 15);
}

TEST_CASE("determinant invariance of the law on random marked Grams") {
  std::mt19937 rng(20260819u);
  std::uniform_int_distribution<long> dist(-20, 20);
  for (int trial = 0; trial < 100; ++trial) {
    const long a = dist(rng), b = dist(rng), c = dist(rng);
    const MarkedGram src = marked(a, b, c);
    const MarkedGram img = cremona_gram_image(src);
    const Int det_src = det_exact(src.gram());
    CHECK(det_src == det_exact(img.gram()));
    // Closed form of the common determinant.
    const Int ia(a), ib(b), ic(c);
    CHECK(det_src == 20 * ic - 12 * ia * ia + 8 * ia * ib - 3 * ib * ib);
  }
}

TEST_CASE("applying the law twice is an isometry of the source") {
  CHECK(gram_image_involutive(marked(1, 1, 9)));
  CHECK(gram_image_involutive(marked(0, 1, 14)));
  CHECK(gram_image_involutive(marked(1, -2, 11)));
  // The double image of (1, 1, 9) lands on (11, 1, 77).
  const MarkedGram twice = cremona_gram_image(cremona_gram_image(marked(1, 1, 9)));
  CHECK(twice.a() == 11);
  CHECK(twice.b() == 1);
  CHECK(twice.c() == 77);
}

TEST_CASE("the law agrees with the rank-4 frame computation") {
  // Extend the frame (h^2, v, l) by a fourth class s with pairings
  // (A, B, 0) and norm C, transform all four classes by the substitution
  // and re-mark: the (h'^2, v', s') Gram must equal the law's output.
  const MatZ m3 = primed_transformation();
  std::mt19937 rng(77u);
  std::uniform_int_distribution<long> dist(-10, 10);
  for (int trial = 0; trial < 50; ++trial) {
    const long a = dist(rng), b = dist(rng), c = dist(rng);
    MatZ g4(4, 4);
    g4 << 3, 4, 0, a, 4, 12, 0, b, 0, 0, -1, 0, a, b, 0, c;

    MatZ q = MatZ::Zero(4, 4);
    q.topLeftCorner(3, 3) = m3;
    const Int t = Int(3 * a - b);
    // s' = s + (3A - B) l', staying orthogonal to l'.
    q(3, 3) = 1;
    for (int i = 0; i < 3; ++i) q(i, 3) = t * m3(i, 2);
    const MatZ g4p = q.transpose() * g4 * q;

    CHECK(g4p(2, 2) == -1);
    CHECK(g4p(2, 3) == 0);
    CHECK(g4p(0, 2) == 0);
    CHECK(g4p(1, 2) == 0);

    MatZ marked_image(3, 3);
    const int keep[3] = {0, 1, 3};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) marked_image(i, j) = g4p(keep[i], keep[j]);
    }
    const MarkedGram expected = cremona_gram_image(marked(a, b, c));
    CHECK(marked_image == expected.gram());
  }
}
