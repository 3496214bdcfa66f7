// SPDX-License-Identifier: MIT
/**
 * @file test_chow.cpp
 * @brief Blowup intersection tables, the frame basis change, and the
 *        discriminant-group action.
 */
#include <doctest.h>

#include "vclat/chow.hpp"
#include "vclat/matrix.hpp"

using namespace vclat;

TEST_CASE("Segre class computation with all intermediates") {
  const SegreComputation sc = segre_computation();
  CHECK(sc.tangent_chern == SurfaceClass{1, 3, 3});
  CHECK(sc.ambient_chern_restricted == SurfaceClass{1, 12, 60});
  CHECK(sc.ambient_chern_inverse == SurfaceClass{1, -12, 84});
  CHECK(sc.segre == SurfaceClass{1, -9, 51});
  CHECK(segre_class_veronese() == SurfaceClass{1, -9, 51});
  // Inverses really invert in the truncated ring.
  CHECK(sc.ambient_chern_restricted * sc.ambient_chern_inverse == SurfaceClass{1, 0, 0});
}

TEST_CASE("surface class ring arithmetic") {
  const SurfaceClass a{1, 2, 3};
  const SurfaceClass b{2, -1, 0};
  CHECK(a * b == SurfaceClass{2, 3, 4});
  CHECK(a + b == SurfaceClass{3, 1, 3});
  CHECK(a.scaled(3) == SurfaceClass{3, 6, 9});
  CHECK(a * a.inverse() == SurfaceClass{1, 0, 0});
  CHECK(a.integrate() == 3);
  CHECK_THROWS_AS((SurfaceClass{0, 1, 1}.inverse()), std::invalid_argument);
}

TEST_CASE("degree-5 intersection table on the blowup") {
  const ChowTable g = gamma_table();
  CHECK(g.dim == 5);
  CHECK(g.value(5, 0) == 1);
  CHECK(g.value(4, 1) == 0);
  CHECK(g.value(3, 2) == 0);
  CHECK(g.value(2, 3) == 4);
  CHECK(g.value(1, 4) == 18);
  CHECK(g.value(0, 5) == 51);
  CHECK_THROWS_WITH_AS(g.value(6, 0), "no table entry for requested monomial",
                       std::invalid_argument);
}

TEST_CASE("degree-4 table on the transform of a cubic through the surface") {
  const ChowTable y = y_table();
  CHECK(y.dim == 4);
  CHECK(y.value(4, 0) == 3);
  CHECK(y.value(3, 1) == 0);
  CHECK(y.value(2, 2) == -4);
  CHECK(y.value(1, 3) == -6);
  CHECK(y.value(0, 4) == 3);
}

TEST_CASE("divisor powers against the degree-5 table") {
  const ChowTable g = gamma_table();
  // H^5 = 1, and the hand-expanded quintic (2H - E)^5 = 32 - 40*4 + 10*18 - 51.
  CHECK(g.pair_divisors({{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}}) == 1);
  CHECK(g.pair_divisors({{2, -1}, {2, -1}, {2, -1}, {2, -1}, {2, -1}}) == 1);
}

TEST_CASE("frame classes and their Gram matrix") {
  const auto [ell, v] = veronese_frame_classes();
  CHECK(ell == Codim2Class{0, ratio(1, 2), 0});
  CHECK(v == Codim2Class{0, ratio(3, 2), -1});

  const ChowTable y = y_table();
  const Codim2Class h2{1, 0, 0};
  CHECK(pair_codim2(h2, h2, y) == 3);
  CHECK(pair_codim2(h2, v, y) == 4);
  CHECK(pair_codim2(v, v, y) == 12);
  CHECK(pair_codim2(ell, ell, y) == -1);
  CHECK(pair_codim2(h2, ell, y) == 0);
  CHECK(pair_codim2(v, ell, y) == 0);

  MatZ expected(3, 3);
  expected << 3, 4, 0, 4, 12, 0, 0, 0, -1;
  CHECK(frame_gram_h2_v_ell() == expected);
}

TEST_CASE("basis change induced by h -> 2h - e, e -> 3h - 2e") {
  const MatZ m = primed_transformation();
  MatZ expected(3, 3);
  expected << 4, 0, 3, -1, 1, -1, -5, 0, -4;
  CHECK(m == expected);
  CHECK((m * m).isIdentity());
  // The substitution is an isometry of the frame lattice.
  const MatZ g = frame_gram_h2_v_ell();
  CHECK(m.transpose() * g * m == g);
}

TEST_CASE("discriminant action certificate") {
  const DiscActionCert cert = disc_action_certificate();
  CHECK(cert.multiplier == 9);
  CHECK((cert.multiplier * cert.multiplier) % 20 == 1);

  MatZ g(3, 3);
  g << 3, -4, 0, -4, 3, -3, 0, -3, -1;
  CHECK(cert.gram_h2_e2_ell == g);

  VecQ dual(3);
  dual << ratio(4, 20), ratio(3, 20), ratio(-9, 20);
  CHECK(cert.dual_e2 == dual);

  MatZ p(3, 3);
  p << 4, 9, 3, 1, 4, 1, -8, -24, -7;
  CHECK(cert.basis_to_primed == p);

  VecQ dual_primed(3);
  dual_primed << ratio(16, 20), ratio(7, 20), ratio(-41, 20);
  CHECK(cert.dual_e2_in_primed == dual_primed);

  VecZ c(3);
  c << 1, 1, -2;
  CHECK(cert.certificate == c);

  // The multiplier is the only unit mod 20 making the difference integral.
  int integral_units = 0;
  for (long u = 1; u < 20; ++u) {
    if (gcd(Int(u), Int(20)) != 1) continue;
    const VecQ diff = Rat(u) * cert.dual_e2 - cert.dual_e2_in_primed;
    if (is_integral(diff)) ++integral_units;
  }
  CHECK(integral_units == 1);
  CHECK(disc_action_multiplier() == 9);
}
