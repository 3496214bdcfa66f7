// SPDX-License-Identifier: MIT
/**
 * @file matrix.cpp
 * @brief Exact linear algebra: Bareiss determinants, rational elimination.
 */
#include "vclat/matrix.hpp"

#include <stdexcept>

namespace vclat {

MatQ to_rational(const MatZ& m) {
  MatQ out(m.rows(), m.cols());
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

VecQ to_rational(const VecZ& v) {
  VecQ out(v.size());
  for (long i = 0; i < v.size(); ++i) out(i) = Rat(v(i));
  return out;
}

bool is_symmetric(const MatZ& m) {
  if (m.rows() != m.cols()) return false;
  for (long i = 0; i < m.rows(); ++i)
    for (long j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

Int det_exact(const MatZ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix must be square");
  const long n = m.rows();
  if (n == 0) return 1;
  MatZ a = m;
  Int sign = 1;
  Int prev = 1;
  for (long k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      long pivot = -1;
      for (long i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return 0;
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        // Bareiss update: every division here is exact.
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rat det_exact(const MatQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix must be square");
  const long n = m.rows();
  MatQ a = m;
  Rat det = 1;
  for (long k = 0; k < n; ++k) {
    long pivot = -1;
    for (long i = k; i < n; ++i) {
      if (a(i, k) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return Rat(0);
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      det = -det;
    }
    det *= a(k, k);
    const Rat inv_piv = Rat(1) / a(k, k);
    for (long i = k + 1; i < n; ++i) {
      const Rat f = a(i, k) * inv_piv;
      if (f == 0) continue;
      for (long j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

MatQ inverse_exact(const MatQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix must be square");
  const long n = m.rows();
  MatQ a = m;
  MatQ inv = MatQ::Zero(n, n);
  for (long i = 0; i < n; ++i) inv(i, i) = 1;
  for (long k = 0; k < n; ++k) {
    long pivot = -1;
    for (long i = k; i < n; ++i) {
      if (a(i, k) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw std::invalid_argument("inverse: matrix is singular");
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      inv.row(k).swap(inv.row(pivot));
    }
    const Rat inv_piv = Rat(1) / a(k, k);
    for (long j = 0; j < n; ++j) {
      a(k, j) *= inv_piv;
      inv(k, j) *= inv_piv;
    }
    for (long i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rat f = a(i, k);
      for (long j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

VecQ solve_exact(const MatQ& a, const VecQ& b) {
  if (a.rows() != a.cols() || a.rows() != b.size()) {
    throw std::invalid_argument("solve: dimension mismatch");
  }
  return inverse_exact(a) * b;
}

long rank_exact(const MatQ& m) {
  MatQ a = m;
  const long rows = a.rows(), cols = a.cols();
  long rank = 0;
  for (long col = 0; col < cols && rank < rows; ++col) {
    long pivot = -1;
    for (long i = rank; i < rows; ++i) {
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) a.row(rank).swap(a.row(pivot));
    const Rat inv_piv = Rat(1) / a(rank, col);
    for (long i = rank + 1; i < rows; ++i) {
      const Rat f = a(i, col) * inv_piv;
      if (f == 0) continue;
      for (long j = col; j < cols; ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

bool is_integral(const MatQ& m, MatZ* out) {
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  if (out != nullptr) {
    out->resize(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
      for (long j = 0; j < m.cols(); ++j) (*out)(i, j) = m(i, j).get_num();
  }
  return true;
}

bool is_integral(const VecQ& v, VecZ* out) {
  for (long i = 0; i < v.size(); ++i)
    if (!is_integer(v(i))) return false;
  if (out != nullptr) {
    out->resize(v.size());
    for (long i = 0; i < v.size(); ++i) (*out)(i) = v(i).get_num();
  }
  return true;
}

bool lex_less(const VecZ& a, const VecZ& b) {
  const long n = std::min(a.size(), b.size());
  for (long i = 0; i < n; ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

}  // namespace vclat
