// SPDX-License-Identifier: MIT
/**
 * @file fm.hpp
 * @brief Counting Fourier–Mukai partners of the K3 surfaces associated to
 *        special cubic fourfolds of discriminant d, by enumerating glue
 *        classes between the rank-1 transcendental complement and the
 *        degree lattice.
 *
 * Valid discriminants are the d >= 8 with d congruent to 0 or 2 mod 6 and
 * not divisible by 9 (so the associated lattices exist and the counting
 * hypotheses hold).
 */
#pragma once

#include "vclat/lattice.hpp"

#include <map>
#include <string>
#include <vector>

namespace vclat {

/// Everything the count produces, kept for reporting.
struct FMCountReport {
  Int d;
  Int m;                       ///< multiplicativity factor 2^(...) from the odd primes
  Int partner_count;           ///< number of Fourier-Mukai partners
  std::string residue_case;    ///< "2 mod 6" or "0 mod 6"
  std::map<Int, Int> glue_sizes;  ///< nonempty glue classes: label c -> size
};

/// True iff d is even, >= 8, congruent to 0 or 2 mod 6, and 9 does not
/// divide d.
bool fm_valid_d(const Int& d);

/**
 * The factor m determined by the shape of d: for d = 2^a * (odd primes),
 * m = 1 when d is a power of two (a >= 2), 2^(k-1) when a = 1 with k
 * distinct odd primes, and 2^k when a >= 2.
 * Throws std::invalid_argument("outside counting hypothesis") for invalid d.
 */
Int m_of(const Int& d);

/// Number of Fourier-Mukai partners: m when d = 2 mod 6, m/2 when d = 0 mod 6.
Int fm_partner_count(const Int& d);

/**
 * Sizes of the nonempty glue classes.  For d = 2 mod 6 the class of c
 * collects the units b mod d with 3 b^2 c = 1 mod 2d; for d = 0 mod 6 it
 * collects the units b mod d/3 with b^2 = c mod 2d/3.  Each partner
 * corresponds to half a class, so partner_count = |class| / 2 uniformly.
 */
std::map<Int, Int> glue_sizes(const Int& d);

/// Full report combining the pieces above.
FMCountReport fm_count(const Int& d);

/// Rank-2 comparison lattice for the discriminant-group cross-check:
/// ((3, 1), (1, (d+1)/3)) for d = 2 mod 6, ((3, 0), (0, d/3)) for d = 0 mod 6.
GramLattice fm_cross_check_lattice(const Int& d);

/// Data of the rank-1 complement: generator square -(d * ...)/... recorded
/// as the single Gram entry.
struct SLatticeSpec {
  Int d;
  Int ell_sq;
};

/**
 * The self-intersection of the generator of the rank-1 complement used in
 * the count: -3d for d = 2 mod 6 (computed as -(3d)), and -d/3 for
 * d = 0 mod 6.  Examples: 20 -> -60, 12 -> -4, 14 -> -42.
 */
SLatticeSpec s_lattice(const Int& d);

}  // namespace vclat
