// SPDX-License-Identifier: MIT
/**
 * @file test_lattice.cpp
 * @brief Core lattice machinery against independent oracles and pinned
 *        values.
 */
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "vclat/lattice.hpp"
#include "vclat/matrix.hpp"

using namespace vclat;

namespace {

/// Oracle: gcd of all k x k minors.  The k-th determinantal divisor of a
/// matrix; the k-th Smith invariant factor is d_k / d_{k-1}.
Int minor_gcd(const MatZ& m, long k) {
  Int g = 0;
  std::vector<std::vector<long>> row_subsets, col_subsets;
  std::vector<long> current;
  std::function<void(long, long, long, std::vector<std::vector<long>>&)> gen =
      [&](long start, long n, long need, std::vector<std::vector<long>>& out) {
        if (need == 0) {
          out.push_back(current);
          return;
        }
        for (long i = start; i + need <= n + 1; ++i) {
          current.push_back(i);
          gen(i + 1, n, need - 1, out);
          current.pop_back();
        }
      };
  gen(0, m.rows() - 1, k, row_subsets);
  current.clear();
  gen(0, m.cols() - 1, k, col_subsets);

  for (const auto& rs : row_subsets) {
    for (const auto& cs : col_subsets) {
      MatZ sub(k, k);
      for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
      g = gcd(g, det_exact(sub));
    }
  }
  return abs(g);
}

/// Oracle: Smith invariant factors through determinantal divisors.
std::vector<Int> smith_factors_by_minors(const MatZ& m) {
  const long r = rank_exact(m);
  std::vector<Int> factors;
  Int prev = 1;
  for (long k = 1; k <= r; ++k) {
    const Int dk = minor_gcd(m, k);
    factors.push_back(dk / prev);
    prev = dk;
  }
  return factors;
}

/// Oracle: signature by symmetric congruence diagonalization over Q.
std::pair<int, int> signature_oracle(const MatZ& gram) {
  MatQ a = to_rational(gram);
  const long n = a.rows();
  int pos = 0, neg = 0;
  for (long k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      // Find a usable pivot: another diagonal entry, or create one from an
      // off-diagonal entry via a symmetric row+column addition.
      long swap_with = -1;
      for (long i = k + 1; i < n; ++i) {
        if (a(i, i) != 0) {
          swap_with = i;
          break;
        }
      }
      if (swap_with >= 0) {
        a.row(k).swap(a.row(swap_with));
        a.col(k).swap(a.col(swap_with));
      } else {
        long j = -1;
        for (long i = k + 1; i < n && j < 0; ++i) {
          if (a(k, i) != 0) j = i;
        }
        if (j < 0) continue;  // zero row: contributes nothing
        a.row(k) += a.row(j);
        a.col(k) += a.col(j);
      }
    }
    const Rat pivot = a(k, k);
    if (pivot > 0) {
      ++pos;
    } else {
      ++neg;
    }
    for (long i = k + 1; i < n; ++i) {
      const Rat f = a(i, k) / pivot;
      a.row(i) -= f * a.row(k);
      a.col(i) -= f * a.col(k);
    }
  }
  return {pos, neg};
}

/// Oracle: brute-force short-vector enumeration over the coordinate box
/// |x_i|^2 <= n * (G^{-1})_{ii}.
std::vector<VecZ> vectors_of_norm_box(const GramLattice& lat, const Int& n) {
  const long r = lat.rank();
  const MatQ ginv = inverse_exact(lat.gram());
  std::vector<long> lo(r), hi(r);
  for (long i = 0; i < r; ++i) {
    const Rat bound2 = Rat(n) * ginv(i, i);
    const Int b = sqrt_floor_of_ratio(bound2.get_num(), bound2.get_den());
    hi[i] = static_cast<long>(b.get_si());
    lo[i] = -hi[i];
  }
  std::vector<VecZ> found;
  VecZ x = VecZ::Zero(r);
  std::function<void(long)> walk = [&](long i) {
    if (i == r) {
      if (!x.isZero(0) && lat.norm(x) == n) found.push_back(x);
      return;
    }
    for (long t = lo[i]; t <= hi[i]; ++t) {
      x(i) = t;
      walk(i + 1);
    }
    x(i) = 0;
  };
  walk(0);
  std::sort(found.begin(), found.end(), lex_less);
  return found;
}

MatZ mat3(long a00, long a01, long a02, long a10, long a11, long a12, long a20, long a21,
          long a22) {
  MatZ m(3, 3);
  m << a00, a01, a02, a10, a11, a12, a20, a21, a22;
  return m;
}

MatZ mat2(long a, long b, long c, long d) {
  MatZ m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("smith normal form of the Veronese labelling Gram") {
  const MatZ m = mat2(3, 4, 4, 12);
  const SmithResult s = smith_normal_form(m);
  const std::vector<Int> expected{1, 20};
  CHECK(s.invariant_factors() == expected);
  CHECK(s.u * m * s.v == s.d);
  CHECK(abs(det_exact(s.u)) == 1);
  CHECK(abs(det_exact(s.v)) == 1);
  CHECK(s.invariant_factors() == smith_factors_by_minors(m));
}

TEST_CASE("smith normal form respects the determinantal-divisor oracle") {
  const std::vector<MatZ> cases{
      mat2(2, -1, -1, 2),
      mat2(0, 0, 0, 0),
      mat2(6, 4, 2, 8),
      mat3(2, 4, 4, -6, 6, 12, 10, 4, 16),
      mat3(1, 2, 3, 4, 5, 6, 7, 8, 9),  // rank 2
      (MatZ(2, 3) << 1, 0, 0, 1, 1, 0).finished(),
  };
  for (const MatZ& m : cases) {
    const SmithResult s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(abs(det_exact(s.u)) == 1);
    CHECK(abs(det_exact(s.v)) == 1);
    // Nonzero factors match the oracle; divisibility chain holds.
    const std::vector<Int> factors = s.invariant_factors();
    std::vector<Int> nonzero;
    for (const Int& f : factors) {
      if (f != 0) nonzero.push_back(f);
    }
    CHECK(nonzero == smith_factors_by_minors(m));
    for (size_t i = 0; i + 1 < factors.size(); ++i) {
      if (factors[i] != 0) CHECK(factors[i + 1] % factors[i] == 0);
    }
  }
}

TEST_CASE("discriminant group of the hexagonal root lattice is Z/3") {
  const GramLattice a2(mat2(2, -1, -1, 2));
  const DiscGroup dg = discriminant_group(a2);
  CHECK(dg.order() == 3);
  CHECK(dg.nontrivial_factors() == std::vector<Int>{3});
  CHECK(dg.cyclic());
}

TEST_CASE("discriminant group order always equals |det|") {
  const std::vector<MatZ> grams{mat2(3, 4, 4, 12), mat2(3, 1, 1, 7),
                                mat3(3, 1, 1, 1, 7, 0, 1, 0, 9), mat2(2, 0, 0, 2)};
  for (const MatZ& g : grams) {
    const GramLattice lat(g);
    CHECK(discriminant_group(lat).order() == abs(lat.det()));
  }
}

TEST_CASE("dual basis of the rank-2 lattice (3 1; 1 7)") {
  const GramLattice lat(mat2(3, 1, 1, 7));
  const MatQ dual = dual_basis(lat);
  CHECK(dual(0, 0) == ratio(7, 20));
  CHECK(dual(0, 1) == ratio(-1, 20));
  CHECK(dual(1, 0) == ratio(-1, 20));
  CHECK(dual(1, 1) == ratio(3, 20));
  // Duality: pairing of dual row i with basis row j is delta_ij.
  CHECK(dual * to_rational(lat.gram()) == MatQ::Identity(2, 2));
}

TEST_CASE("dual vector of e^2 in the frame (h^2, e^2, l)") {
  const GramLattice lat(mat3(3, -4, 0, -4, 3, -3, 0, -3, -1));
  const MatQ dual = dual_basis(lat);
  CHECK(dual(1, 0) == ratio(4, 20));
  CHECK(dual(1, 1) == ratio(3, 20));
  CHECK(dual(1, 2) == ratio(-9, 20));
}

TEST_CASE("gram lattice validation") {
  CHECK_THROWS_WITH_AS(GramLattice((MatZ(2, 3) << 1, 0, 0, 0, 1, 0).finished()),
                       "gram matrix must be square", std::invalid_argument);
  CHECK_THROWS_WITH_AS(GramLattice(mat2(3, 4, 5, 12)), "asymmetric at (1,2)/(2,1)",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(GramLattice(mat2(1, 1, 1, 1)), "degenerate lattice",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(GramLattice(mat2(2, 0, 0, 2), {"only-one"}),
                       "label count must match rank", std::invalid_argument);
}

TEST_CASE("E8 root lattice invariants") {
  const GramLattice e8 = e8_lattice();
  CHECK(e8.rank() == 8);
  CHECK(e8.det() == 1);
  CHECK(e8.is_even());
  CHECK(e8.is_positive_definite());
  CHECK(vectors_of_norm(e8, 2).size() == 240);
  CHECK(discriminant_group(e8).order() == 1);
}

TEST_CASE("hyperbolic plane and the rank-23 middle cohomology lattice") {
  const GramLattice u = hyperbolic_plane();
  CHECK(u.gram() == mat2(0, 1, 1, 0));
  CHECK(u.det() == -1);

  const GramLattice big = middle_cohomology_lattice();
  CHECK(big.rank() == 23);
  CHECK(big.det() == 1);
  CHECK_FALSE(big.is_even());
  const VecZ h2 = hyperplane_square_vector();
  CHECK(big.norm(h2) == 3);
  CHECK(signature_oracle(big.gram()) == std::pair<int, int>(21, 2));
  CHECK(signature_oracle(e8_lattice().gram()) == std::pair<int, int>(8, 0));
  CHECK(signature_oracle(u.gram()) == std::pair<int, int>(1, 1));
}

TEST_CASE("saturation through Smith invariant factors") {
  const GramLattice amb(mat3(3, 1, 1, 1, 7, 0, 1, 0, 9));
  MatZ sat(2, 3);
  sat << 1, 0, 0, 1, 1, 0;
  CHECK(is_saturated(AmbientVectors(amb, sat)));

  MatZ unsat(2, 3);
  unsat << 2, 0, 0, 0, 1, 0;
  CHECK_FALSE(is_saturated(AmbientVectors(amb, unsat)));

  MatZ dependent(2, 3);
  dependent << 1, 1, 0, 2, 2, 0;
  CHECK_THROWS_WITH_AS(is_saturated(AmbientVectors(amb, dependent)), "dependent vectors",
                       std::invalid_argument);

  MatZ wrong_width(1, 2);
  wrong_width << 1, 0;
  CHECK_THROWS_WITH_AS(AmbientVectors(amb, wrong_width), "ambient dimension mismatch",
                       std::invalid_argument);
}

TEST_CASE("short vector enumeration matches the box oracle") {
  const std::vector<MatZ> grams{
      mat2(2, -1, -1, 2),
      mat2(3, 1, 1, 7),
      mat3(3, 1, 1, 1, 7, 0, 1, 0, 9),
      mat3(2, 0, 1, 0, 4, 1, 1, 1, 6),
  };
  for (const MatZ& g : grams) {
    const GramLattice lat(g);
    for (long n = 1; n <= 12; ++n) {
      const auto fast = vectors_of_norm(lat, Int(n));
      const auto slow = vectors_of_norm_box(lat, Int(n));
      REQUIRE(fast.size() == slow.size());
      for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
    }
  }
}

TEST_CASE("enumeration edge cases") {
  const GramLattice lat(mat2(2, -1, -1, 2));
  CHECK(vectors_of_norm(lat, Int(0)).empty());
  CHECK(vectors_of_norm(lat, Int(-2)).empty());
  CHECK(vectors_of_norm(lat, Int(1)).empty());  // even lattice: no odd norms
  CHECK_THROWS_WITH_AS(vectors_of_norm(hyperbolic_plane(), Int(2)),
                       "enumeration requires positive definite", std::invalid_argument);
}

TEST_CASE("norm-2 freeness and the norm-3 witness of the (20, 26) component lattice") {
  const GramLattice lat(mat3(3, 1, 1, 1, 7, 0, 1, 0, 9));
  CHECK(vectors_of_norm(lat, Int(2)).empty());
  const auto w = has_vector_of_norm(lat, Int(3));
  REQUIRE(w.has_value());
  VecZ e0 = VecZ::Zero(3);
  e0(0) = 1;
  CHECK(*w == e0);
  CHECK(lat.norm(*w) == 3);
}

TEST_CASE("isometry testing distinguishes lattices of equal determinant") {
  const GramLattice a(mat2(1, 0, 0, 16));
  const GramLattice b(mat2(4, 0, 0, 4));
  CHECK(a.det() == b.det());
  CHECK_FALSE(isometry_exists(a, b).has_value());

  const GramLattice c(mat2(2, 1, 1, 2));
  const auto self = isometry_exists(c, c);
  REQUIRE(self.has_value());
  CHECK(self->transpose() * c.gram() * (*self) == c.gram());
}

TEST_CASE("isometry testing finds a change of basis when one exists") {
  const MatZ g = mat3(3, 1, 1, 1, 7, 0, 1, 0, 9);
  MatZ u(3, 3);
  u << 1, 2, 0, 0, 1, 0, 3, 1, 1;  // unimodular: det 1
  REQUIRE(det_exact(u) == 1);
  const MatZ g2 = u.transpose() * g * u;
  const auto t = isometry_exists(GramLattice(g), GramLattice(g2));
  REQUIRE(t.has_value());
  CHECK(t->transpose() * g * (*t) == g2);
  CHECK(abs(det_exact(*t)) == 1);
}

TEST_CASE("isometry guards") {
  CHECK_FALSE(
      isometry_exists(GramLattice(mat2(2, 0, 0, 2)), GramLattice(mat2(2, 1, 1, 2))).has_value());
  CHECK_THROWS_WITH_AS(
      isometry_exists(hyperbolic_plane(), hyperbolic_plane()),
      "out of supported range", std::invalid_argument);
}

TEST_CASE("binary form solver on the discriminant-146 labelling form") {
  const BinaryForm f{20, -98, 146};
  CHECK(f.positive_definite());
  CHECK(f.disc() == 98 * 98 - 4 * 20 * 146);
  CHECK_FALSE(represents(f, Int(2)).has_value());
  const auto w20 = represents(f, Int(20));
  REQUIRE(w20.has_value());
  CHECK(w20->first == 1);
  CHECK(w20->second == 0);
  const auto w146 = represents_primitive(f, Int(146));
  REQUIRE(w146.has_value());
  CHECK(w146->first == 0);
  CHECK(w146->second == 1);
  CHECK(f.eval(w146->first, w146->second) == 146);
}

TEST_CASE("binary form solver edge cases") {
  const BinaryForm f{3, 2, 5};
  CHECK_FALSE(represents(f, Int(0)).has_value());
  CHECK_FALSE(represents(f, Int(-4)).has_value());
  const auto w = represents(f, Int(3));
  REQUIRE(w.has_value());
  CHECK(f.eval(w->first, w->second) == 3);
  // 4 = f(2, 0) scaled: representable but not primitively (4a = 12 > 4, so
  // any witness of 4 would need y = 0 and 3x^2 = 4: none).
  CHECK_FALSE(represents(f, Int(4)).has_value());

  const BinaryForm indefinite{1, 0, -1};
  CHECK_THROWS_WITH_AS(represents(indefinite, Int(5)), "indefinite form",
                       std::invalid_argument);

  // Primitivity separates x = (2, 0) from x = (1, 0).
  const BinaryForm g{1, 0, 7};
  const auto w4 = represents(g, Int(4));
  REQUIRE(w4.has_value());
  CHECK(w4->first == 2);
  CHECK(w4->second == 0);
  CHECK_FALSE(represents_primitive(g, Int(4)).has_value());
}
