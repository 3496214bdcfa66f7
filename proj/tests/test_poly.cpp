// SPDX-License-Identifier: MIT
/**
 * @file test_poly.cpp
 * @brief Sparse exact-rational polynomial arithmetic.
 */
#include <doctest.h>

#include "vclat/poly.hpp"

using namespace vclat;

namespace {
SparsePoly x(int i) { return SparsePoly::variable(i); }
}  // namespace

TEST_CASE("construction and basic queries") {
  const SparsePoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == 0);
  CHECK(zero.term_count() == 0);

  const SparsePoly c = SparsePoly::constant(ratio(3, 2));
  CHECK(c.degree() == 0);
  CHECK(c.term_count() == 1);

  const SparsePoly p = x(0) * x(4) + x(3).scaled(-2);
  CHECK(p.degree() == 2);
  CHECK(p.term_count() == 2);
  CHECK_FALSE(p.is_homogeneous());

  CHECK_THROWS_WITH_AS(SparsePoly::variable(6), "variable index out of range",
                       std::invalid_argument);
}

TEST_CASE("ring arithmetic") {
  const SparsePoly p = x(0) + x(1);
  const SparsePoly q = x(0) - x(1);
  CHECK(p * q == x(0) * x(0) - x(1) * x(1));
  CHECK(p + (-p) == SparsePoly());
  CHECK(p - p == SparsePoly());
  CHECK(pow(p, 2) == x(0) * x(0) + (x(0) * x(1)).scaled(2) + x(1) * x(1));
  CHECK(pow(p, 0) == SparsePoly::constant(1));
  // Cancelling coefficients erase their monomials entirely.
  const SparsePoly cancel = p * q + x(1) * x(1) - x(0) * x(0);
  CHECK(cancel.is_zero());
}

TEST_CASE("coefficient lookup") {
  const SparsePoly p = (x(2) * x(4)).scaled(5) - x(3) * x(3);
  SparsePoly::Monomial m{};
  m[2] = 1;
  m[4] = 1;
  CHECK(p.coefficient(m) == 5);
  SparsePoly::Monomial m2{};
  m2[3] = 2;
  CHECK(p.coefficient(m2) == -1);
  SparsePoly::Monomial absent{};
  absent[0] = 1;
  CHECK(p.coefficient(absent) == 0);
}

TEST_CASE("homogeneity and degree") {
  const SparsePoly quadric = x(0) * x(4) - x(1) * x(3);
  CHECK(quadric.is_homogeneous());
  CHECK(quadric.degree() == 2);
  const SparsePoly mixed = quadric + x(5);
  CHECK_FALSE(mixed.is_homogeneous());
  CHECK(mixed.degree() == 2);
}

TEST_CASE("substitution composes polynomials") {
  // p = x0^2 + x1; substitute x0 -> x1 + x2, x1 -> x3 * x4.
  const SparsePoly p = x(0) * x(0) + x(1);
  std::array<SparsePoly, kPolyVars> repl{x(1) + x(2), x(3) * x(4), x(2), x(3), x(4), x(5)};
  const SparsePoly q = p.substitute(repl);
  const SparsePoly expected =
      x(1) * x(1) + (x(1) * x(2)).scaled(2) + x(2) * x(2) + x(3) * x(4);
  CHECK(q == expected);

  // Substituting the identity is a no-op.
  std::array<SparsePoly, kPolyVars> identity{x(0), x(1), x(2), x(3), x(4), x(5)};
  CHECK(p.substitute(identity) == p);
}

TEST_CASE("rendering") {
  const SparsePoly p = x(2) * x(4) - x(3) * x(3);
  CHECK(p.to_string() == "-x3^2 + x2*x4");
  CHECK(SparsePoly().to_string() == "0");
  CHECK(SparsePoly::constant(ratio(-1, 2)).to_string() == "-1/2");
}
