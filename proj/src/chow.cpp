// SPDX-License-Identifier: MIT
/**
 * @file chow.cpp
 * @brief Blowup intersection tables and the induced codimension-2 involution.
 */
#include "vclat/chow.hpp"

#include <optional>
#include <stdexcept>

namespace vclat {

SurfaceClass SurfaceClass::operator*(const SurfaceClass& o) const {
  // Graded product on a surface: two curve classes meet in a point class.
  return SurfaceClass{c0 * o.c0, c0 * o.c1 + c1 * o.c0, c0 * o.c2 + c2 * o.c0 + c1 * o.c1};
}

SurfaceClass SurfaceClass::operator+(const SurfaceClass& o) const {
  return SurfaceClass{c0 + o.c0, c1 + o.c1, c2 + o.c2};
}

SurfaceClass SurfaceClass::scaled(const Rat& f) const {
  return SurfaceClass{c0 * f, c1 * f, c2 * f};
}

SurfaceClass SurfaceClass::inverse() const {
  if (c0 == 0) throw std::invalid_argument("surface class has no inverse");
  const Rat i0 = Rat(1) / c0;
  // (c0 + c1 + c2)^{-1} = i0 * (1 - w + w^2) truncated, w = (c1 + c2)/c0.
  return SurfaceClass{i0, -c1 * i0 * i0, (c1 * c1 - c0 * c2) * i0 * i0 * i0};
}

SegreComputation segre_computation() {
  SegreComputation out;
  // The surface is a plane embedded by conics: its tangent classes are
  // those of the plane, and the ambient hyperplane restricts to a conic.
  out.tangent_chern = SurfaceClass{1, 3, 3};
  const SurfaceClass conic{0, 2, 0};
  // c(T of P^5) = (1 + H)^6 restricted: 1 + 6*(2l) + 15*(2l)^2.
  const SurfaceClass conic2 = conic * conic;
  out.ambient_chern_restricted =
      SurfaceClass{1, 0, 0} + conic.scaled(6) + conic2.scaled(15);
  out.ambient_chern_inverse = out.ambient_chern_restricted.inverse();
  out.segre = out.tangent_chern * out.ambient_chern_inverse;
  return out;
}

SurfaceClass segre_class_veronese() { return segre_computation().segre; }

Rat ChowTable::value(int a, int b) const {
  const auto it = values.find({a, b});
  if (it == values.end()) {
    throw std::invalid_argument("no table entry for requested monomial");
  }
  return it->second;
}

Rat ChowTable::pair_divisors(const std::vector<std::pair<Rat, Rat>>& factors) const {
  if (static_cast<int>(factors.size()) != dim) {
    throw std::invalid_argument("divisor count must equal table dimension");
  }
  // Expand the product, tracking coefficients by the exceptional degree.
  std::vector<Rat> coeff{Rat(1)};
  for (const auto& [x, y] : factors) {
    std::vector<Rat> next(coeff.size() + 1, Rat(0));
    for (size_t k = 0; k < coeff.size(); ++k) {
      next[k] += coeff[k] * x;
      next[k + 1] += coeff[k] * y;
    }
    coeff = std::move(next);
  }
  Rat acc(0);
  for (size_t k = 0; k < coeff.size(); ++k) {
    if (coeff[k] == 0) continue;
    acc += coeff[k] * value(dim - static_cast<int>(k), static_cast<int>(k));
  }
  return acc;
}

ChowTable gamma_table() {
  ChowTable t;
  t.dim = 5;
  t.values[{5, 0}] = 1;  // degree of projective 5-space
  const SurfaceClass s = segre_class_veronese();
  const SurfaceClass conic{0, 2, 0};
  for (int k = 1; k <= 5; ++k) {
    // Push down H^{5-k} E^k: up to sign this is the degree of the Segre
    // class against 5-k conic sections.
    SurfaceClass pow{1, 0, 0};
    for (int j = 0; j < 5 - k; ++j) pow = pow * conic;
    const Rat val = (pow * s).integrate();
    t.values[{5 - k, k}] = (k % 2 == 1) ? val : -val;
  }
  return t;
}

ChowTable y_table() {
  const ChowTable g = gamma_table();
  ChowTable t;
  t.dim = 4;
  for (int a = 4; a >= 0; --a) {
    const int b = 4 - a;
    t.values[{a, b}] = Rat(3) * g.value(a + 1, b) - g.value(a, b + 1);
  }
  return t;
}

Codim2Class Codim2Class::operator+(const Codim2Class& o) const {
  return Codim2Class{h2 + o.h2, he + o.he, e2 + o.e2};
}

Codim2Class Codim2Class::operator-(const Codim2Class& o) const {
  return Codim2Class{h2 - o.h2, he - o.he, e2 - o.e2};
}

Codim2Class Codim2Class::scaled(const Rat& f) const {
  return Codim2Class{h2 * f, he * f, e2 * f};
}

Rat pair_codim2(const Codim2Class& a, const Codim2Class& b, const ChowTable& y) {
  if (y.dim != 4) throw std::invalid_argument("pairing needs the degree-4 table");
  const Rat ac[3] = {a.h2, a.he, a.e2};
  const Rat bc[3] = {b.h2, b.he, b.e2};
  Rat acc(0);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (ac[i] == 0 || bc[j] == 0) continue;
      acc += ac[i] * bc[j] * y.value(4 - i - j, i + j);
    }
  }
  return acc;
}

Codim2Class divisor_product(const std::pair<Rat, Rat>& d1, const std::pair<Rat, Rat>& d2) {
  return Codim2Class{d1.first * d2.first, d1.first * d2.second + d1.second * d2.first,
                     d1.second * d2.second};
}

std::pair<Codim2Class, Codim2Class> veronese_frame_classes() {
  const Codim2Class ell{0, ratio(1, 2), 0};
  const Codim2Class v{0, ratio(3, 2), -1};
  return {ell, v};
}

namespace {

/// Columns of the (h^2, v, l) basis over (h^2, he, e^2).
MatQ frame_basis_columns() {
  MatQ b(3, 3);
  b << Rat(1), Rat(0), Rat(0),        //
      Rat(0), ratio(3, 2), ratio(1, 2),  //
      Rat(0), Rat(-1), Rat(0);
  return b;
}

VecQ class_to_vec(const Codim2Class& c) {
  VecQ v(3);
  v << c.h2, c.he, c.e2;
  return v;
}

/// The three primed generators h'^2, v', l' over (h^2, he, e^2), obtained
/// from the divisor substitution h -> 2h - e, e -> 3h - 2e.
void primed_classes(Codim2Class& h2p, Codim2Class& vp, Codim2Class& ellp, Codim2Class& e2p) {
  const std::pair<Rat, Rat> hp{2, -1};
  const std::pair<Rat, Rat> ep{3, -2};
  h2p = divisor_product(hp, hp);
  const Codim2Class hep = divisor_product(hp, ep);
  e2p = divisor_product(ep, ep);
  vp = hep.scaled(ratio(3, 2)) - e2p;
  ellp = hep.scaled(ratio(1, 2));
}

}  // namespace

MatZ frame_gram_h2_v_ell() {
  const ChowTable y = y_table();
  const auto [ell, v] = veronese_frame_classes();
  const Codim2Class h2{1, 0, 0};
  const Codim2Class basis[3] = {h2, v, ell};
  MatQ g(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = pair_codim2(basis[i], basis[j], y);
  MatZ out;
  if (!is_integral(g, &out)) throw std::logic_error("frame gram is not integral");
  return out;
}

MatZ primed_transformation() {
  Codim2Class h2p, vp, ellp, e2p;
  primed_classes(h2p, vp, ellp, e2p);
  const MatQ b = frame_basis_columns();
  const MatQ binv = inverse_exact(b);
  MatQ m(3, 3);
  m.col(0) = binv * class_to_vec(h2p);
  m.col(1) = binv * class_to_vec(vp);
  m.col(2) = binv * class_to_vec(ellp);
  MatZ out;
  if (!is_integral(m, &out)) throw std::logic_error("primed transformation is not integral");
  const MatZ square = out * out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (square(i, j) != (i == j ? 1 : 0)) {
        throw std::logic_error("primed transformation is not an involution");
      }
  return out;
}

DiscActionCert disc_action_certificate() {
  const ChowTable y = y_table();
  const Codim2Class h2{1, 0, 0};
  const Codim2Class e2{0, 0, 1};
  const Codim2Class ell{0, ratio(1, 2), 0};
  Codim2Class h2p, vp, ellp, e2p;
  primed_classes(h2p, vp, ellp, e2p);

  const Codim2Class basis[3] = {h2, e2, ell};
  const Codim2Class primed[3] = {h2p, e2p, ellp};

  MatQ gram(3, 3), gram_primed(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      gram(i, j) = pair_codim2(basis[i], basis[j], y);
      gram_primed(i, j) = pair_codim2(primed[i], primed[j], y);
      if (gram(i, j) != gram_primed(i, j)) {
        throw std::logic_error("discriminant action inconsistent");
      }
    }
  }

  DiscActionCert cert;
  if (!is_integral(gram, &cert.gram_h2_e2_ell)) {
    throw std::logic_error("discriminant action inconsistent");
  }

  // Dual vector of e^2: the middle row of the inverse Gram matrix, valid in
  // both bases because their Gram matrices agree.
  const MatQ gram_inv = inverse_exact(gram);
  cert.dual_e2 = gram_inv.row(1).transpose();

  // Coordinates of (h^2, e^2, l) over the primed basis.
  MatQ bp(3, 3);
  bp.col(0) = class_to_vec(h2p);
  bp.col(1) = class_to_vec(e2p);
  bp.col(2) = class_to_vec(ellp);
  const MatQ bp_inv = inverse_exact(bp);
  MatQ p(3, 3);
  p.col(0) = bp_inv * class_to_vec(h2);
  p.col(1) = bp_inv * class_to_vec(e2);
  p.col(2) = bp_inv * class_to_vec(ell);
  if (!is_integral(p, &cert.basis_to_primed)) {
    throw std::logic_error("discriminant action inconsistent");
  }

  cert.dual_e2_in_primed = p * cert.dual_e2;

  // Find the unit u with u * (e'^2)* = (e^2)* modulo integer vectors; in
  // primed coordinates (e'^2)* equals the same dual row.
  const Int group_order = abs(det_exact(cert.gram_h2_e2_ell));
  std::optional<Int> unit;
  for (Int u = 1; u < group_order; ++u) {
    if (gcd(u, group_order) != 1) continue;
    VecQ diff = cert.dual_e2;
    diff *= Rat(u);
    diff -= cert.dual_e2_in_primed;
    VecZ integral;
    if (is_integral(diff, &integral)) {
      unit = u;
      break;
    }
  }
  if (!unit) throw std::logic_error("discriminant action inconsistent");
  cert.multiplier = *unit;

  VecQ diff = cert.dual_e2;
  diff *= Rat(cert.multiplier);
  diff -= cert.dual_e2_in_primed;
  if (!is_integral(diff, &cert.certificate)) {
    throw std::logic_error("discriminant action inconsistent");
  }
  return cert;
}

Int disc_action_multiplier() { return disc_action_certificate().multiplier; }

}  // namespace vclat
