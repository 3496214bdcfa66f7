// SPDX-License-Identifier: MIT
/**
 * @file chow.hpp
 * @brief Intersection theory for the blowup of projective 5-space along a
 *        Veronese surface: Segre classes, the H/E intersection tables, the
 *        induced degree-4 birational involution on codimension-2 classes,
 *        and its action on the discriminant group of the relevant rank-3
 *        sublattice.
 *
 * Conventions: on the Veronese surface (a projective plane embedded by
 * conics) classes live over the basis (fundamental class, line, point);
 * on the blown-up 5-space, H is the pullback of the hyperplane and E the
 * exceptional divisor; codimension-2 classes on the blown-up cubic live
 * over the basis (h^2, h e, e^2).
 */
#pragma once

#include "vclat/matrix.hpp"

#include <map>
#include <utility>
#include <vector>

namespace vclat {

/// Graded class on a surface over (fundamental class, curve, point).
struct SurfaceClass {
  Rat c0, c1, c2;

  SurfaceClass operator*(const SurfaceClass& o) const;
  SurfaceClass operator+(const SurfaceClass& o) const;
  SurfaceClass scaled(const Rat& f) const;
  /// Multiplicative inverse; requires an invertible degree-0 part.
  SurfaceClass inverse() const;
  /// Degree of the point component.
  Rat integrate() const { return c2; }

  bool operator==(const SurfaceClass& o) const = default;
};

/// Intermediates of the Segre class computation, kept for verification.
struct SegreComputation {
  SurfaceClass tangent_chern;             ///< c(T) of the surface
  SurfaceClass ambient_chern_restricted;  ///< c(T of P^5) pulled back
  SurfaceClass ambient_chern_inverse;     ///< its multiplicative inverse
  SurfaceClass segre;                     ///< product of the two
};

SegreComputation segre_computation();

/// Segre class of the Veronese surface in projective 5-space: (1, -9, 51).
SurfaceClass segre_class_veronese();

/// Table of intersection numbers of monomials H^a E^b with a + b = dim.
struct ChowTable {
  int dim = 0;
  std::map<std::pair<int, int>, Rat> values;

  Rat value(int a, int b) const;
  /// Integral of a product of dim divisors, each x*H + y*E.
  Rat pair_divisors(const std::vector<std::pair<Rat, Rat>>& factors) const;
};

/// Degree-5 table on the blowup of P^5 along the Veronese surface.
ChowTable gamma_table();

/// Degree-4 table on the proper transform of a cubic containing the
/// surface: value(a, b) = 3 * gamma(a+1, b) - gamma(a, b+1).
ChowTable y_table();

/// Codimension-2 class over the basis (h^2, h e, e^2).
struct Codim2Class {
  Rat h2, he, e2;

  Codim2Class operator+(const Codim2Class& o) const;
  Codim2Class operator-(const Codim2Class& o) const;
  Codim2Class scaled(const Rat& f) const;

  bool operator==(const Codim2Class& o) const = default;
};

/// Degree of the product of two codimension-2 classes, evaluated against
/// the degree-4 table.
Rat pair_codim2(const Codim2Class& a, const Codim2Class& b, const ChowTable& y);

/// Product of two divisor classes x*h + y*e as a codimension-2 class.
Codim2Class divisor_product(const std::pair<Rat, Rat>& d1, const std::pair<Rat, Rat>& d2);

/// The classes (l, v): l is half of h*e, and v = (3/2) h e - e^2 is the
/// class of the surface's image plane section frame; over (h^2, he, e^2)
/// these are (0, 1/2, 0) and (0, 3/2, -1).
std::pair<Codim2Class, Codim2Class> veronese_frame_classes();

/// Gram matrix of the basis (h^2, v, l): ((3,4,0),(4,12,0),(0,0,-1)).
MatZ frame_gram_h2_v_ell();

/**
 * Matrix of the involution on the span of (h^2, v, l) induced by
 * substituting h -> 2h - e, e -> 3h - 2e, written in columns on that basis.
 * Guaranteed integral with square the identity.
 */
MatZ primed_transformation();

/// Certificate data for the action on the rank-3 discriminant group.
struct DiscActionCert {
  Int multiplier;            ///< the unit u with u * (e'^2)* = (e^2)* mod L
  MatZ gram_h2_e2_ell;       ///< Gram of (h^2, e^2, l)
  VecQ dual_e2;              ///< (e^2)* over (h^2, e^2, l)
  MatZ basis_to_primed;      ///< coordinates of (h^2, e^2, l) over the primed basis
  VecQ dual_e2_in_primed;    ///< (e^2)* over the primed basis
  VecZ certificate;          ///< u * (e'^2)* - (e^2)*, integral by construction
};

/**
 * The unit u (mod 20) with u * (e'^2)* congruent to (e^2)* modulo the
 * lattice, for the rank-3 lattice spanned by (h^2, e^2, l); returns 9.
 * Throws std::logic_error("discriminant action inconsistent") if the
 * internal cross-checks fail.
 */
DiscActionCert disc_action_certificate();
Int disc_action_multiplier();

}  // namespace vclat
