// Dense bivariate polynomials as integer coefficient matrices: entry (i, j)
// is the coefficient of X^i Y^j.
#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "littlewood/numeric.hpp"
#include "littlewood/unipoly.hpp"

namespace littlewood {

// Canonical form: the last row and the last column each contain a nonzero
// entry; the zero polynomial is the 0x0 matrix.
class BiPoly {
 public:
  BiPoly() = default;

  static BiPoly from_flat(int rows, int cols, std::vector<Int> a) {
    if (rows < 0 || cols < 0 || a.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
      throw std::invalid_argument("BiPoly::from_flat: shape mismatch");
    BiPoly f;
    f.rows_ = rows;
    f.cols_ = cols;
    f.a_ = std::move(a);
    f.canonicalize();
    return f;
  }

  static BiPoly from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return BiPoly();
    const size_t cols = rows.front().size();
    std::vector<Int> flat;
    flat.reserve(rows.size() * cols);
    for (const auto& r : rows) {
      if (r.size() != cols) throw std::invalid_argument("BiPoly::from_rows: ragged rows");
      for (const auto& v : r) flat.push_back(v);
    }
    return from_flat(static_cast<int>(rows.size()), static_cast<int>(cols), std::move(flat));
  }

  static BiPoly constant(Int v) {
    if (v == 0) return BiPoly();
    return from_flat(1, 1, {std::move(v)});
  }

  bool is_zero() const { return rows_ == 0; }
  int deg_x() const { return rows_ - 1; }
  int deg_y() const { return cols_ - 1; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_constant() const { return rows_ <= 1 && cols_ <= 1; }

  const Int& coeff(int i, int j) const {
    if (i < 0 || j < 0 || i >= rows_ || j >= cols_) return kIntZero;
    return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
  }

  const std::vector<Int>& flat() const { return a_; }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

 private:
  void canonicalize() {
    int r = rows_, c = cols_;
    while (r > 0) {
      bool z = true;
      for (int j = 0; j < cols_ && z; ++j)
        if (a_[static_cast<size_t>(r - 1) * cols_ + j] != 0) z = false;
      if (!z) break;
      --r;
    }
    if (r == 0) {
      rows_ = cols_ = 0;
      a_.clear();
      return;
    }
    while (c > 0) {
      bool z = true;
      for (int i = 0; i < r && z; ++i)
        if (a_[static_cast<size_t>(i) * cols_ + (c - 1)] != 0) z = false;
      if (!z) break;
      --c;
    }
    if (r != rows_ || c != cols_) {
      std::vector<Int> b;
      b.reserve(static_cast<size_t>(r) * c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) b.push_back(std::move(a_[static_cast<size_t>(i) * cols_ + j]));
      a_ = std::move(b);
      rows_ = r;
      cols_ = c;
    }
  }

  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;  // row-major
};

inline BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  const int rows = std::max(a.rows(), b.rows());
  const int cols = std::max(a.cols(), b.cols());
  std::vector<Int> c(static_cast<size_t>(rows) * cols, Int(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) c[static_cast<size_t>(i) * cols + j] = a.coeff(i, j) + b.coeff(i, j);
  return BiPoly::from_flat(rows, cols, std::move(c));
}

inline BiPoly operator-(const BiPoly& a) {
  std::vector<Int> c(a.flat());
  for (auto& v : c) v = -v;
  return BiPoly::from_flat(a.rows(), a.cols(), std::move(c));
}

inline BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

inline BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  const int rows = a.rows() + b.rows() - 1;
  const int cols = a.cols() + b.cols() - 1;
  std::vector<Int> c(static_cast<size_t>(rows) * cols, Int(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Int& av = a.coeff(i, j);
      if (av == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          mpz_addmul(c[static_cast<size_t>(i + k) * cols + (j + l)].get_mpz_t(), av.get_mpz_t(),
                     b.coeff(k, l).get_mpz_t());
        }
    }
  return BiPoly::from_flat(rows, cols, std::move(c));
}

inline Height height(const BiPoly& f) {
  Int h = 0;
  for (const Int& v : f.flat()) {
    Int a = abs_int(v);
    if (a > h) h = std::move(a);
  }
  return h;
}

inline Int content(const BiPoly& f) {
  Int g = 0;
  for (const Int& v : f.flat()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Substitutes X = v; the result lives in Y (coefficient of Y^j is
// sum_i F[i][j] v^i).
inline UniPoly specialize_x(const BiPoly& f, const Int& v) {
  if (f.is_zero()) return UniPoly();
  std::vector<Int> out(static_cast<size_t>(f.cols()), Int(0));
  for (int j = 0; j < f.cols(); ++j) {
    Int acc = 0;
    for (int i = f.rows() - 1; i >= 0; --i) {
      acc *= v;
      acc += f.coeff(i, j);
    }
    out[static_cast<size_t>(j)] = std::move(acc);
  }
  return UniPoly(std::move(out));
}

// Substitutes Y = v; the result lives in X.
inline UniPoly specialize_y(const BiPoly& f, const Int& v) {
  if (f.is_zero()) return UniPoly();
  std::vector<Int> out(static_cast<size_t>(f.rows()), Int(0));
  for (int i = 0; i < f.rows(); ++i) {
    Int acc = 0;
    for (int j = f.cols() - 1; j >= 0; --j) {
      acc *= v;
      acc += f.coeff(i, j);
    }
    out[static_cast<size_t>(i)] = std::move(acc);
  }
  return UniPoly(std::move(out));
}

// f(X) * g(Y) as a matrix (the rank-one product).
inline BiPoly outer_product(const UniPoly& fx, const UniPoly& gy) {
  if (fx.is_zero() || gy.is_zero()) return BiPoly();
  const int rows = fx.degree() + 1;
  const int cols = gy.degree() + 1;
  std::vector<Int> c(static_cast<size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) c[static_cast<size_t>(i) * cols + j] = fx.coeff(i) * gy.coeff(j);
  return BiPoly::from_flat(rows, cols, std::move(c));
}

inline bool all_coeffs_pm_one(const BiPoly& f) {
  if (f.is_zero()) return false;
  for (const Int& v : f.flat())
    if (v != 1 && v != -1) return false;
  return true;
}

}  // namespace littlewood
