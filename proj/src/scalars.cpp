// SPDX-License-Identifier: MIT
/**
 * @file scalars.cpp
 * @brief Exact integer square roots and scalar formatting.
 */
#include "vclat/scalars.hpp"

#include <stdexcept>

namespace vclat {

Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt_floor: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n, Int* root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (root != nullptr) *root = isqrt_floor(n);
  return true;
}

Int sqrt_floor_of_ratio(const Int& p, const Int& q) {
  if (p < 0 || q <= 0) {
    throw std::invalid_argument("sqrt_floor_of_ratio: requires p >= 0, q > 0");
  }
  // floor(sqrt(p/q)) is the largest t with t^2 * q <= p.  Start from the
  // integer-division estimate and correct by at most one step each way.
  Int t = isqrt_floor(p / q);
  while ((t + 1) * (t + 1) * q <= p) ++t;
  while (t > 0 && t * t * q > p) --t;
  return t;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (is_integer(v)) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace vclat
