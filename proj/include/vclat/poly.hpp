// SPDX-License-Identifier: MIT
/**
 * @file poly.hpp
 * @brief Sparse polynomials in six variables with exact rational
 *        coefficients, sufficient for manipulating the quadrics defining
 *        the cubo-cubic Cremona transformation.
 */
#pragma once

#include "vclat/scalars.hpp"

#include <array>
#include <map>
#include <string>

namespace vclat {

/// Number of ambient coordinates the polynomial ring carries.
inline constexpr int kPolyVars = 6;

/**
 * A sparse multivariate polynomial over Q in kPolyVars variables.
 * Zero coefficients are never stored, so equality of the term maps is
 * equality of polynomials.
 */
class SparsePoly {
 public:
  using Monomial = std::array<int, kPolyVars>;

  SparsePoly() = default;

  static SparsePoly variable(int index);
  static SparsePoly constant(const Rat& value);

  bool is_zero() const { return terms_.empty(); }
  /// Largest total degree among stored monomials (0 for the zero polynomial).
  int degree() const;
  /// True iff every stored monomial has the same total degree.
  bool is_homogeneous() const;
  long term_count() const { return static_cast<long>(terms_.size()); }

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly scaled(const Rat& f) const;

  bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }

  /// Simultaneous substitution variable i -> repl[i].
  SparsePoly substitute(const std::array<SparsePoly, kPolyVars>& repl) const;

  /// Coefficient of a monomial (zero if absent).
  Rat coefficient(const Monomial& m) const;

  const std::map<Monomial, Rat>& terms() const { return terms_; }

  /// Rendering like "x2*x4 - x3^2", terms in the stored monomial order.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rat& c);

  std::map<Monomial, Rat> terms_;
};

SparsePoly pow(const SparsePoly& base, int exponent);

}  // namespace vclat
