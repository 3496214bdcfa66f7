// SPDX-License-Identifier: MIT
/**
 * @file test_fm.cpp
 * @brief Fourier–Mukai partner counts against hand-enumerated glue classes
 *        and the discriminant-group cross-check.
 */
#include <doctest.h>

#include <map>
#include <vector>

#include "vclat/fm.hpp"

using namespace vclat;

TEST_CASE("validity of discriminants") {
  CHECK(fm_valid_d(8));
  CHECK(fm_valid_d(12));
  CHECK(fm_valid_d(14));
  CHECK(fm_valid_d(20));
  CHECK(fm_valid_d(200));
  CHECK_FALSE(fm_valid_d(6));   // too small
  CHECK_FALSE(fm_valid_d(7));   // odd residue
  CHECK_FALSE(fm_valid_d(10));  // 4 mod 6
  CHECK_FALSE(fm_valid_d(18));  // divisible by 9
  CHECK_FALSE(fm_valid_d(54));  // divisible by 9

  // Exactly 54 valid d up to 200: 33 with d = 2 mod 6 and 21 with d = 0 mod 6.
  int valid = 0, res2 = 0, res0 = 0;
  for (Int d = 1; d <= 200; ++d) {
    if (!fm_valid_d(d)) continue;
    ++valid;
    (d % 6 == 2 ? res2 : res0) += 1;
  }
  CHECK(valid == 54);
  CHECK(res2 == 33);
  CHECK(res0 == 21);
}

TEST_CASE("the factor m from the shape of d") {
  CHECK(m_of(8) == 1);    // power of two
  CHECK(m_of(32) == 1);   // power of two
  CHECK(m_of(14) == 1);   // 2 * prime
  CHECK(m_of(50) == 1);   // 2 * 5^2
  CHECK(m_of(98) == 1);   // 2 * 7^2
  CHECK(m_of(20) == 2);   // 4 * 5
  CHECK(m_of(12) == 2);   // 4 * 3
  CHECK(m_of(42) == 2);   // 2 * 3 * 7
  CHECK(m_of(60) == 4);   // 4 * 3 * 5
  CHECK(m_of(168) == 4);  // 8 * 3 * 7
  CHECK_THROWS_WITH_AS(m_of(10), "outside counting hypothesis", std::invalid_argument);
  CHECK_THROWS_WITH_AS(m_of(18), "outside counting hypothesis", std::invalid_argument);
}

TEST_CASE("partner counts at the discriminants of interest") {
  CHECK(fm_partner_count(20) == 2);
  CHECK(fm_partner_count(14) == 1);
  CHECK(fm_partner_count(26) == 1);
  CHECK(fm_partner_count(38) == 1);
  CHECK(fm_partner_count(62) == 1);
  CHECK(fm_partner_count(42) == 1);
  CHECK(fm_partner_count(12) == 1);
  CHECK(fm_partner_count(60) == 2);
  CHECK(fm_partner_count(200) == 2);
}

TEST_CASE("glue classes match hand enumeration") {
  // d = 8: units b mod 8 pair off as c = (3 b^2)^(-1) mod 16.
  const std::map<Int, Int> g8 = glue_sizes(8);
  CHECK(g8 == std::map<Int, Int>{{Int(3), Int(2)}, {Int(11), Int(2)}});

  // d = 20: two classes of size 4 = 2 * partner count.
  const std::map<Int, Int> g20 = glue_sizes(20);
  CHECK(g20 == std::map<Int, Int>{{Int(3), Int(4)}, {Int(27), Int(4)}});

  // d = 14: three classes of size 2.
  const std::map<Int, Int> g14 = glue_sizes(14);
  CHECK(g14 == std::map<Int, Int>{{Int(3), Int(2)}, {Int(19), Int(2)}, {Int(27), Int(2)}});

  // d = 42 (residue 0): classes labelled by squares of units mod 28.
  const std::map<Int, Int> g42 = glue_sizes(42);
  CHECK(g42 == std::map<Int, Int>{{Int(1), Int(2)}, {Int(9), Int(2)}, {Int(25), Int(2)}});

  // d = 12 (residue 0): a single class.
  const std::map<Int, Int> g12 = glue_sizes(12);
  CHECK(g12 == std::map<Int, Int>{{Int(1), Int(2)}});
}

TEST_CASE("every class has size 2m for all valid d up to 100") {
  for (Int d = 8; d <= 100; ++d) {
    if (!fm_valid_d(d)) continue;
    const FMCountReport rep = fm_count(d);  // throws internally on any mismatch
    CHECK(rep.partner_count == (d % 6 == 2 ? rep.m : rep.m / 2));
    for (const auto& [c, size] : rep.glue_sizes) {
      CHECK(size == 2 * rep.partner_count);
      CHECK(c >= 0);
    }
  }
}

TEST_CASE("report fields") {
  const FMCountReport r20 = fm_count(20);
  CHECK(r20.d == 20);
  CHECK(r20.m == 2);
  CHECK(r20.partner_count == 2);
  CHECK(r20.residue_case == "2 mod 6");

  const FMCountReport r42 = fm_count(42);
  CHECK(r42.residue_case == "0 mod 6");
  CHECK(r42.partner_count == 1);
}

TEST_CASE("discriminant-group cross-check lattice") {
  // Residue 2: ((3, 1), (1, (d+1)/3)); residue 0: ((3, 0), (0, d/3)).
  const GramLattice c20 = fm_cross_check_lattice(20);
  CHECK(c20.gram()(0, 0) == 3);
  CHECK(c20.gram()(0, 1) == 1);
  CHECK(c20.gram()(1, 1) == 7);
  const GramLattice c12 = fm_cross_check_lattice(12);
  CHECK(c12.gram()(0, 1) == 0);
  CHECK(c12.gram()(1, 1) == 4);

  for (Int d = 8; d <= 200; ++d) {
    if (!fm_valid_d(d)) continue;
    const DiscGroup grp = discriminant_group(fm_cross_check_lattice(d));
    CHECK(grp.order() == d);
    CHECK(grp.cyclic());
  }
}

TEST_CASE("rank-1 complement generator squares") {
  CHECK(s_lattice(20).ell_sq == -60);
  CHECK(s_lattice(12).ell_sq == -4);
  CHECK(s_lattice(14).ell_sq == -42);
  // Divisibility by 9 is allowed here, unlike in the counting itself.
  CHECK(s_lattice(18).ell_sq == -6);
  CHECK_THROWS_WITH_AS(s_lattice(10), "outside counting hypothesis", std::invalid_argument);
}
