// SPDX-License-Identifier: MIT
/**
 * @file moduli.hpp
 * @brief Components of the intersections of divisors of special cubic
 *        fourfolds: explicit rank-3 sublattices of the middle cohomology
 *        realising a pair of labellings, their Cremona images, labelling
 *        forms, and the component-level rationality reports.
 *
 * Conventions: a "marked" rank-3 Gram matrix lists the square of the
 * hyperplane class first; a labelling of discriminant d is a saturated
 * rank-2 sublattice containing that class with determinant d.
 */
#pragma once

#include "vclat/cremona.hpp"
#include "vclat/lattice.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace vclat {

/// True iff the divisor of discriminant d is nonempty: d >= 8, d = 0 or
/// 2 mod 6.
bool disc_nonempty(const Int& d);

/**
 * True iff d is an admissible discriminant (an associated degree-d K3
 * exists): nonempty, not divisible by 4 or 9, and with no odd prime
 * factor congruent to 2 mod 3.
 */
bool admissible(const Int& d);

/**
 * Largest |tau| for which the two-labelling construction below yields a
 * component: with n_i = floor(d_i / 6) and s = n1*n2 - min(n1, n2), this
 * is sqrt(4s) - 1 when 4s is a perfect square and floor(sqrt(4s))
 * otherwise.  Requires d1 != d2, both nonempty.
 */
Int tau_bound(const Int& d1, const Int& d2);

/// Residue pattern of (d1, d2) mod 6.
enum class CongCase { TwoTwo, TwoZero, ZeroZero };
std::string cong_case_name(CongCase c);

/// A component of the intersection of two labelling divisors, given by an
/// explicit saturated rank-3 sublattice of the middle cohomology.
struct ComponentSpec {
  Int d1, d2, tau;
  CongCase cong;
  MatZ gram;                ///< induced Gram of (h^2, alpha2, alpha3)
  AmbientVectors ambient;   ///< the three rows in the rank-23 lattice
  Int disc;                 ///< determinant of gram, computed exactly
  Int closed_form_disc;     ///< (d1 d2 - (3 tau - 1)^2)/3 or (d1 d2 - 9 tau^2)/3
  bool norm2_free;          ///< no vector of norm 2 (component nonempty)
  bool m_saturated;         ///< the rank-3 sublattice is saturated
  bool k_d1_saturated;      ///< <h^2, alpha2> is saturated
  bool k_d2_saturated;      ///< <h^2, alpha3> is saturated
};

/**
 * The component lattice M_tau for the pair (d1, d2) at parameter tau, with
 * all preconditions enforced: both discriminants nonempty, tau within
 * tau_bound (|tau| <= N when both are 2 mod 6, 0 <= tau <= N otherwise),
 * and no vector of norm 2 (throws "component is empty: lattice has a
 * norm-2 vector" otherwise).  In the mixed case the discriminant that is
 * 2 mod 6 must come first.
 */
ComponentSpec component_gram(const Int& d1, const Int& d2, const Int& tau);

/**
 * Same construction without the nonemptiness / range / norm-2 guards, for
 * surveys that deliberately step outside them; the check fields still
 * report what holds.
 */
ComponentSpec component_template(const Int& d1, const Int& d2, const Int& tau);

/**
 * Re-marks a positive-definite rank-3 lattice whose first basis vector is
 * the hyperplane square (norm 3): finds the lexicographically least vector
 * v of norm 12 with h.v = 4 spanning a saturated pair with h, completes
 * (h, v) to a basis by the Smith-form completion, and returns the Gram in
 * the new basis.  Throws std::invalid_argument("no Veronese frame") when
 * no such v exists.
 */
MarkedGram veronese_frame(const GramLattice& g);

/**
 * The quadratic form whose values are the discriminants of the rank-2
 * labelling sublattices through the marked class: for a marked Gram g
 * (first row h^2, norm 3) and the sublattice spanned by h^2 and
 * b*w1 + c*w2, the discriminant is 3*q(b,c) - p(b,c)^2 with q the lower
 * right 2x2 block and p the pairing row.  Requires g(0,0) = 3.
 */
BinaryForm labelling_form_of(const MatZ& gram3);
BinaryForm labelling_form(const MarkedGram& g);

/// A represented labelling discriminant with its primitive witness.
struct Labelling {
  Int d;
  Int x, y;
};

/**
 * All discriminants d' <= d_max of labellings through the marked class:
 * values of the labelling form at primitive pairs, each with its first
 * witness.
 */
std::vector<Labelling> represented_discs(const MatZ& gram3, const Int& d_max);

/**
 * Smallest modulus m <= max_modulus in which f(b, c) = n has no solution,
 * if any: an independent certificate that n is not represented.
 */
std::optional<Int> modular_obstruction(const BinaryForm& f, const Int& n,
                                       const Int& max_modulus = 64);

/// A component template presentation (d1, d2, tau) compared to a lattice.
struct TemplateFrame {
  Int d1, d2, tau;
  MatZ gram;
  bool isometric;
};

/// End-to-end record of one new-rationality component map.
struct RationalityReport {
  ComponentSpec source;
  MarkedGram marked_source;
  MarkedGram image;
  Int image_disc;                 ///< equals source.disc
  Int target_disc;                ///< the new labelling discriminant
  Labelling target_witness;       ///< primitive witness for target_disc
  TemplateFrame image_template;   ///< (20, target_disc, tau') presentation
  std::vector<Labelling> represented;  ///< all labellings up to represent_max
  Int represent_max;
  std::vector<Int> excluded;      ///< discriminants that must not appear
  bool excluded_list_clear;
  /// For each excluded value, the smallest modulus certifying impossibility
  /// (nullopt when only the interval argument of the solver applies).
  std::vector<std::pair<Int, std::optional<Int>>> exclusion_certificates;
};

/**
 * The three component maps that produce rational cubic fourfolds with a
 * labelling discriminant outside the previously known range: sources
 * (20, 26, 0), (20, 38, -2), (20, 42, 1), with image labellings 146, 62,
 * 182 and discriminants 173, 237, 277.
 */
std::array<RationalityReport, 3> reproduce_new_rationals();

/// Verdict of the beyond-d search for one admissible discriminant.
struct BiggerDiscReport {
  Int d;
  ComponentSpec source;
  MarkedGram marked_source;
  MarkedGram image;
  BinaryForm form;                     ///< labelling form of the image
  std::vector<Int> smaller_admissible; ///< admissible d' <= d, all unrepresented
  bool clause1_holds;
  std::optional<Int> clause1_counterexample;
  std::optional<Labelling> clause2_witness;  ///< least admissible d' > d represented
  Int search_max;                      ///< bound for the clause-2 search
};

/**
 * For an admissible d >= 14, builds the canonical component mapping into
 * C_d (tau = 0 when d = 2 mod 6, tau = 1 when d = 0 mod 6, paired with
 * discriminant 20), applies the transformation, and reports: (1) no
 * admissible d' <= d is represented by the image labelling form, and
 * (2) the least admissible d' > d that is primitively represented, when
 * one exists below search_max.
 */
BiggerDiscReport bigger_disc_report(const Int& d, const Int& search_max = 500);

/// One target presentation an exceptional survey image is isometric to.
struct SurveyTarget {
  Int d1, d2, tau;
  MatZ gram;
  bool isometric_to_image;
};

/// Image data attached to the named rows of the discriminant-(20,14) survey.
struct SurveyImage {
  MarkedGram marked_source;
  MarkedGram image;
  Int image_disc;
  std::vector<SurveyTarget> targets;
  bool singular_disc6 = false;          ///< image meets the discriminant-6 locus
  std::optional<Labelling> disc6_witness;
};

/// One row of the discriminant-(20, 14) survey.
struct SurveyRow {
  Int tau;
  MatZ gram;
  Int disc;
  bool disc_matches_closed_form;
  bool norm2_free;
  bool saturated;
  bool in_c8;                          ///< labelling form represents 8 primitively
  std::optional<Labelling> c8_witness;
  bool conditional;                    ///< |tau| = 4: beyond the guaranteed range
  std::optional<SurveyImage> image;    ///< present for tau in {0, 4, -4}
};

/**
 * The nine candidate components of the (20, 14) intersection, tau from -4
 * to 4: Gram, determinant against the closed form (280 - (3 tau - 1)^2)/3,
 * norm-2-freeness, saturation, the discriminant-8 membership flag, and for
 * tau in {0, 4, -4} the transformation image with its target presentations
 * (tau = -4 also carries the discriminant-6 flag of its image).
 */
std::vector<SurveyRow> c20_c14_survey();

/// One row of a full component sweep with image classification.
struct SweepRow {
  Int tau;
  ComponentSpec comp;
  MarkedGram marked;
  MarkedGram image;
  bool invariant;  ///< image isometric to the source lattice
  std::vector<TemplateFrame> exceptional_targets;  ///< known targets otherwise
};

/**
 * All components for the pair (d1, d2) over the full tau range, each with
 * its transformation image: either isometric to its source or matched
 * against the known exceptional targets.
 */
std::vector<SweepRow> component_sweep(const Int& d1, const Int& d2);

}  // namespace vclat
