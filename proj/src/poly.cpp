// SPDX-License-Identifier: MIT
/**
 * @file poly.cpp
 * @brief Sparse exact polynomial arithmetic.
 */
#include "vclat/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace vclat {

namespace {

int total_degree(const SparsePoly::Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

}  // namespace

SparsePoly SparsePoly::variable(int index) {
  if (index < 0 || index >= kPolyVars) {
    throw std::invalid_argument("variable index out of range");
  }
  SparsePoly p;
  Monomial m{};
  m[static_cast<size_t>(index)] = 1;
  p.terms_[m] = Rat(1);
  return p;
}

SparsePoly SparsePoly::constant(const Rat& value) {
  SparsePoly p;
  if (value != 0) p.terms_[Monomial{}] = value;
  return p;
}

int SparsePoly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (total_degree(m) != d) return false;
  }
  return true;
}

void SparsePoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, Rat(-c));
  return out;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  SparsePoly out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m{};
      for (int i = 0; i < kPolyVars; ++i) m[static_cast<size_t>(i)] = m1[static_cast<size_t>(i)] + m2[static_cast<size_t>(i)];
      out.add_term(m, c1 * c2);
    }
  }
  return out;
}

SparsePoly SparsePoly::scaled(const Rat& f) const {
  SparsePoly out;
  if (f == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_[m] = c * f;
  return out;
}

SparsePoly SparsePoly::substitute(const std::array<SparsePoly, kPolyVars>& repl) const {
  SparsePoly out;
  for (const auto& [m, c] : terms_) {
    SparsePoly term = SparsePoly::constant(c);
    for (int i = 0; i < kPolyVars; ++i) {
      for (int e = 0; e < m[static_cast<size_t>(i)]; ++e) term = term * repl[static_cast<size_t>(i)];
    }
    out = out + term;
  }
  return out;
}

Rat SparsePoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat coeff = c;
    if (first) {
      if (coeff < 0) {
        out += "-";
        coeff = -coeff;
      }
    } else {
      out += coeff < 0 ? " - " : " + ";
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    std::string vars;
    for (int i = 0; i < kPolyVars; ++i) {
      const int e = m[static_cast<size_t>(i)];
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      out += vclat::to_string(coeff);
    } else if (coeff == 1) {
      out += vars;
    } else {
      out += vclat::to_string(coeff) + "*" + vars;
    }
  }
  return out;
}

SparsePoly pow(const SparsePoly& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  SparsePoly out = SparsePoly::constant(Rat(1));
  for (int i = 0; i < exponent; ++i) out = out * base;
  return out;
}

}  // namespace vclat
