// SPDX-License-Identifier: MIT
/**
 * @file lattice.cpp
 * @brief Exact lattice algorithms: Smith normal form with transform
 *        tracking, discriminant groups, short-vector enumeration by
 *        completion of squares, isometry backtracking, and binary forms.
 */
#include "vclat/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace vclat {

namespace {

MatZ identity_z(long n) {
  MatZ m = MatZ::Zero(n, n);
  for (long i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Int abs_z(const Int& v) { return v >= 0 ? v : Int(-v); }

/// Extended gcd: g = gcd(a, b) with g = x*a + y*b.
void xgcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

std::vector<Int> SmithResult::invariant_factors() const {
  const long r = std::min(d.rows(), d.cols());
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(r));
  for (long i = 0; i < r; ++i) out.push_back(d(i, i));
  return out;
}

SmithResult smith_normal_form(const MatZ& m) {
  const long rows = m.rows();
  const long cols = m.cols();
  MatZ a = m;
  MatZ u = identity_z(rows);
  MatZ v = identity_z(cols);

  auto row_swap = [&](long r1, long r2) {
    if (r1 == r2) return;
    a.row(r1).swap(a.row(r2));
    u.row(r1).swap(u.row(r2));
  };
  auto col_swap = [&](long c1, long c2) {
    if (c1 == c2) return;
    a.col(c1).swap(a.col(c2));
    v.col(c1).swap(v.col(c2));
  };
  auto row_axpy = [&](long dst, long src, const Int& f) {
    for (long j = 0; j < cols; ++j) a(dst, j) -= f * a(src, j);
    for (long j = 0; j < rows; ++j) u(dst, j) -= f * u(src, j);
  };
  auto col_axpy = [&](long dst, long src, const Int& f) {
    for (long i = 0; i < rows; ++i) a(i, dst) -= f * a(i, src);
    for (long i = 0; i < cols; ++i) v(i, dst) -= f * v(i, src);
  };
  // Replace rows (t, i) by the unimodular combination that puts
  // gcd(a(t,t), a(i,t)) at position (t, t) and zero at (i, t).
  auto row_combine = [&](long t, long i) {
    Int g, x, y;
    const Int at = a(t, t), ai = a(i, t);
    xgcd(at, ai, g, x, y);
    const Int p = at / g, q = ai / g;  // det of [[x, y], [-q, p]] is 1
    for (long j = 0; j < cols; ++j) {
      const Int rt = a(t, j), ri = a(i, j);
      a(t, j) = x * rt + y * ri;
      a(i, j) = -q * rt + p * ri;
    }
    for (long j = 0; j < rows; ++j) {
      const Int rt = u(t, j), ri = u(i, j);
      u(t, j) = x * rt + y * ri;
      u(i, j) = -q * rt + p * ri;
    }
  };
  auto col_combine = [&](long t, long j) {
    Int g, x, y;
    const Int at = a(t, t), aj = a(t, j);
    xgcd(at, aj, g, x, y);
    const Int p = at / g, q = aj / g;
    for (long i = 0; i < rows; ++i) {
      const Int ct = a(i, t), cj = a(i, j);
      a(i, t) = x * ct + y * cj;
      a(i, j) = -q * ct + p * cj;
    }
    for (long i = 0; i < cols; ++i) {
      const Int ct = v(i, t), cj = v(i, j);
      v(i, t) = x * ct + y * cj;
      v(i, j) = -q * ct + p * cj;
    }
  };

  const long r = std::min(rows, cols);
  for (long t = 0; t < r; ++t) {
    // Deterministic pivot: least |entry| in the trailing block, ties by
    // row then column index.
    long pi = -1, pj = -1;
    for (long i = t; i < rows; ++i) {
      for (long j = t; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        if (pi < 0 || abs_z(a(i, j)) < abs_z(a(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;  // trailing block is zero
    row_swap(t, pi);
    col_swap(t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (long i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        if (a(i, t) % a(t, t) == 0) {
          row_axpy(i, t, a(i, t) / a(t, t));
        } else {
          row_combine(t, i);
          dirty = true;
        }
      }
      for (long j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        if (a(t, j) % a(t, t) == 0) {
          col_axpy(j, t, a(t, j) / a(t, t));
        } else {
          col_combine(t, j);
          dirty = true;  // column combines can refill column t
        }
      }
      if (!dirty) {
        for (long i = t + 1; i < rows; ++i) {
          if (a(i, t) != 0) {
            dirty = true;
            break;
          }
        }
      }
    }
  }

  // Enforce the divisibility chain d_i | d_{i+1} among the nonzero diagonal
  // entries: fold d_{i+1} into column i and re-clear the 2x2 block.
  long nonzero = 0;
  while (nonzero < r && a(nonzero, nonzero) != 0) ++nonzero;
  bool chain_dirty = true;
  while (chain_dirty) {
    chain_dirty = false;
    for (long i = 0; i + 1 < nonzero; ++i) {
      if (a(i + 1, i + 1) % a(i, i) == 0) continue;
      chain_dirty = true;
      col_axpy(i, i + 1, Int(-1));  // a(i+1, i) = d_{i+1}
      row_combine(i, i + 1);        // gcd at (i, i), zero at (i+1, i)
      // The combine leaves a multiple of the new pivot at (i, i+1).
      col_axpy(i + 1, i, a(i, i + 1) / a(i, i));
    }
  }

  // Normalise signs.
  for (long i = 0; i < r; ++i) {
    if (a(i, i) < 0) {
      for (long j = 0; j < cols; ++j) a(i, j) = -a(i, j);
      for (long j = 0; j < rows; ++j) u(i, j) = -u(i, j);
    }
  }

  return SmithResult{a, u, v};
}

GramLattice::GramLattice(MatZ gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  if (gram_.rows() != gram_.cols()) {
    throw std::invalid_argument("gram matrix must be square");
  }
  for (long i = 0; i < gram_.rows(); ++i) {
    for (long j = i + 1; j < gram_.cols(); ++j) {
      if (gram_(i, j) != gram_(j, i)) {
        throw std::invalid_argument("asymmetric at (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")/(" + std::to_string(j + 1) + "," +
                                    std::to_string(i + 1) + ")");
      }
    }
  }
  if (!labels_.empty() && static_cast<long>(labels_.size()) != gram_.rows()) {
    throw std::invalid_argument("label count must match rank");
  }
  det_ = det_exact(gram_);
  if (det_ == 0) throw std::invalid_argument("degenerate lattice");
}

bool GramLattice::is_even() const {
  for (long i = 0; i < gram_.rows(); ++i) {
    if (gram_(i, i) % 2 != 0) return false;
  }
  return true;
}

bool GramLattice::is_positive_definite() const {
  for (long k = 1; k <= gram_.rows(); ++k) {
    if (det_exact(MatZ(gram_.topLeftCorner(k, k))) <= 0) return false;
  }
  return true;
}

Int GramLattice::norm(const VecZ& x) const { return inner(x, x); }

Int GramLattice::inner(const VecZ& x, const VecZ& y) const {
  if (x.size() != rank() || y.size() != rank()) {
    throw std::invalid_argument("inner: coordinate size must match rank");
  }
  Int acc = 0;
  for (long i = 0; i < rank(); ++i) {
    for (long j = 0; j < rank(); ++j) acc += x(i) * gram_(i, j) * y(j);
  }
  return acc;
}

Int DiscGroup::order() const {
  Int p = 1;
  for (const Int& f : invariant_factors) p *= f;
  return p;
}

std::vector<Int> DiscGroup::nontrivial_factors() const {
  std::vector<Int> out;
  for (const Int& f : invariant_factors) {
    if (f != 1) out.push_back(f);
  }
  return out;
}

bool DiscGroup::cyclic() const { return nontrivial_factors().size() <= 1; }

DiscGroup discriminant_group(const GramLattice& lat) {
  // The lattice sits inside its dual with coordinate rows (in the dual
  // basis) equal to the rows of the Gram matrix; the quotient is the
  // cokernel of that row lattice.  With U * G * V = D the cokernel is
  // generated by the rows of V^{-1}, the row for factor d having order d.
  const SmithResult snf = smith_normal_form(lat.gram());
  DiscGroup out;
  out.invariant_factors = snf.invariant_factors();
  MatZ vinv;
  if (!is_integral(inverse_exact(snf.v), &vinv)) {
    throw std::logic_error("smith transform is not unimodular");
  }
  out.generators = vinv;
  return out;
}

MatQ dual_basis(const GramLattice& lat) { return inverse_exact(lat.gram()); }

AmbientVectors::AmbientVectors(GramLattice amb, MatZ vecs)
    : ambient(std::move(amb)), vectors(std::move(vecs)) {
  if (vectors.cols() != ambient.rank()) {
    throw std::invalid_argument("ambient dimension mismatch");
  }
}

MatZ AmbientVectors::induced_gram() const {
  return MatZ(vectors * ambient.gram() * vectors.transpose());
}

bool is_saturated(const AmbientVectors& sub) {
  const SmithResult snf = smith_normal_form(sub.vectors);
  const std::vector<Int> factors = snf.invariant_factors();
  long nonzero = 0;
  for (const Int& f : factors) {
    if (f != 0) ++nonzero;
  }
  if (nonzero != sub.vectors.rows()) throw std::invalid_argument("dependent vectors");
  for (const Int& f : factors) {
    if (f != 0 && f != 1) return false;
  }
  return true;
}

namespace {

/// Completion of squares: G = U^T diag(d) U with U unit upper triangular,
/// so x^T G x = sum_k d_k (x_k + sum_{j>k} U(k,j) x_j)^2.  All pivots must
/// be positive.
void completion_of_squares(const MatZ& g, std::vector<Rat>& d, MatQ& uu) {
  const long n = g.rows();
  MatQ a = to_rational(g);
  d.assign(static_cast<size_t>(n), Rat(0));
  uu = MatQ::Zero(n, n);
  for (long i = 0; i < n; ++i) uu(i, i) = 1;
  for (long k = 0; k < n; ++k) {
    d[static_cast<size_t>(k)] = a(k, k);
    if (a(k, k) <= 0) {
      throw std::invalid_argument("enumeration requires positive definite");
    }
    for (long j = k + 1; j < n; ++j) uu(k, j) = a(k, j) / a(k, k);
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        a(i, j) -= a(k, i) * a(k, j) / a(k, k);
      }
    }
  }
}

/// Floor of a rational.
Int floor_rat(const Rat& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

void enumerate_rec(const std::vector<Rat>& d, const MatQ& uu, long k, const Rat& remaining,
                   VecZ& x, std::vector<VecZ>& out) {
  if (k < 0) {
    if (remaining == 0) out.push_back(x);
    return;
  }
  const long n = static_cast<long>(d.size());
  Rat s(0);
  for (long j = k + 1; j < n; ++j) s += uu(k, j) * Rat(x(j));
  const Rat& dk = d[static_cast<size_t>(k)];
  auto fits = [&](const Int& t) {
    const Rat off = Rat(t) + s;
    return dk * off * off <= remaining;
  };
  // The admissible t form an interval around -s; walk out from floor(-s).
  Int lo = floor_rat(-s);
  if (!fits(lo)) {
    // floor(-s) may fail while floor(-s)+1 succeeds (or nothing does).
    lo += 1;
    if (!fits(lo)) return;
  } else {
    while (fits(lo - 1)) --lo;
  }
  for (Int t = lo; fits(t); ++t) {
    const Rat off = Rat(t) + s;
    x(k) = t;
    enumerate_rec(d, uu, k - 1, remaining - dk * off * off, x, out);
  }
}

}  // namespace

std::vector<VecZ> vectors_of_norm(const GramLattice& lat, const Int& n) {
  std::vector<VecZ> out;
  if (n < 0) return out;
  std::vector<Rat> d;
  MatQ uu;
  completion_of_squares(lat.gram(), d, uu);
  if (n == 0) return out;  // positive definite: only the zero vector
  VecZ x = VecZ::Zero(lat.rank());
  enumerate_rec(d, uu, lat.rank() - 1, Rat(n), x, out);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::optional<VecZ> has_vector_of_norm(const GramLattice& lat, const Int& n) {
  const std::vector<VecZ> all = vectors_of_norm(lat, n);
  std::optional<VecZ> best;
  for (const VecZ& v : all) {
    VecZ rep = v;
    for (long i = 0; i < rep.size(); ++i) {
      if (rep(i) != 0) {
        if (rep(i) < 0) rep = -rep;
        break;
      }
    }
    if (!best || lex_less(rep, *best)) best = rep;
  }
  return best;
}

std::optional<MatZ> isometry_exists(const GramLattice& g1, const GramLattice& g2) {
  if (g1.rank() > 3 || g2.rank() > 3 || !g1.is_positive_definite() ||
      !g2.is_positive_definite()) {
    throw std::invalid_argument("out of supported range");
  }
  if (g1.rank() != g2.rank()) return std::nullopt;
  if (g1.det() != g2.det()) return std::nullopt;
  const long r = g1.rank();

  std::vector<std::vector<VecZ>> candidates(static_cast<size_t>(r));
  for (long j = 0; j < r; ++j) {
    candidates[static_cast<size_t>(j)] = vectors_of_norm(g1, g2.gram()(j, j));
    if (candidates[static_cast<size_t>(j)].empty()) return std::nullopt;
  }

  std::vector<VecZ> chosen(static_cast<size_t>(r));
  std::optional<MatZ> result;
  auto backtrack = [&](auto&& self, long j) -> bool {
    if (j == r) return true;
    for (const VecZ& v : candidates[static_cast<size_t>(j)]) {
      bool ok = true;
      for (long i = 0; i < j; ++i) {
        if (g1.inner(chosen[static_cast<size_t>(i)], v) != g2.gram()(i, j)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen[static_cast<size_t>(j)] = v;
      if (self(self, j + 1)) return true;
    }
    return false;
  };
  if (!backtrack(backtrack, 0)) return std::nullopt;

  MatZ t(r, r);
  for (long j = 0; j < r; ++j) t.col(j) = chosen[static_cast<size_t>(j)];
  const Int dt = det_exact(t);
  if (dt != 1 && dt != -1) {
    throw std::logic_error("isometry transform is not unimodular");
  }
  return t;
}

Int BinaryForm::eval(const Int& x, const Int& y) const {
  return a * x * x + b * x * y + c * y * y;
}

Int BinaryForm::disc() const { return b * b - 4 * a * c; }

bool BinaryForm::positive_definite() const { return a > 0 && disc() < 0; }

namespace {

std::optional<std::pair<Int, Int>> represents_impl(const BinaryForm& f, const Int& n,
                                                   bool primitive) {
  if (!f.positive_definite()) throw std::invalid_argument("indefinite form");
  if (n <= 0) return std::nullopt;
  const Int neg_disc = -f.disc();  // 4ac - b^2 > 0
  for (Int y = 0; neg_disc * y * y <= 4 * f.a * n; ++y) {
    // Solve a x^2 + (b y) x + (c y^2 - n) = 0 exactly.
    const Int disc_x = 4 * f.a * n - neg_disc * y * y;
    Int s;
    if (!is_square(disc_x, &s)) continue;
    std::vector<Int> xs;
    for (int sign : {+1, -1}) {
      const Int num = -f.b * y + sign * s;
      if (num % (2 * f.a) == 0) xs.push_back(num / (2 * f.a));
      if (s == 0) break;
    }
    std::sort(xs.begin(), xs.end(), [](const Int& l, const Int& r) {
      const Int al = abs_z(l), ar = abs_z(r);
      if (al != ar) return al < ar;
      return l > r;  // positive before negative at equal magnitude
    });
    for (const Int& x : xs) {
      if (x == 0 && y == 0) continue;
      if (primitive && gcd(x, y) != 1) continue;
      return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<Int, Int>> represents(const BinaryForm& f, const Int& n) {
  return represents_impl(f, n, false);
}

std::optional<std::pair<Int, Int>> represents_primitive(const BinaryForm& f, const Int& n) {
  return represents_impl(f, n, true);
}

GramLattice e8_lattice() {
  // Simple-root basis: a chain of seven nodes with the eighth attached to
  // the fifth, giving arm lengths (1, 2, 4) around the branch node.
  MatZ g = MatZ::Zero(8, 8);
  for (long i = 0; i < 8; ++i) g(i, i) = 2;
  auto edge = [&](long i, long j) {
    g(i, j) = -1;
    g(j, i) = -1;
  };
  for (long i = 0; i + 1 < 7; ++i) edge(i, i + 1);
  edge(4, 7);
  return GramLattice(g);
}

GramLattice hyperbolic_plane() {
  MatZ g(2, 2);
  g << 0, 1, 1, 0;
  return GramLattice(g);
}

GramLattice middle_cohomology_lattice() {
  MatZ g = MatZ::Zero(23, 23);
  const MatZ e8 = e8_lattice().gram();
  g.block(0, 0, 8, 8) = e8;
  g.block(8, 8, 8, 8) = e8;
  const MatZ uu = hyperbolic_plane().gram();
  g.block(16, 16, 2, 2) = uu;
  g.block(18, 18, 2, 2) = uu;
  for (long i = 20; i < 23; ++i) g(i, i) = 1;
  return GramLattice(g);
}

VecZ hyperplane_square_vector() {
  VecZ h = VecZ::Zero(23);
  h(20) = 1;
  h(21) = 1;
  h(22) = 1;
  return h;
}

}  // namespace vclat
