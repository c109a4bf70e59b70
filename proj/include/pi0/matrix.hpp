#pragma once

#include "pi0/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace pi0 {

/// Dense row-major matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("IntMatrix initializer");
      for (long x : row) data_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("IntMatrix::from_rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  void append_row(const IntVector& r) {
    if (rows_ == 0 && data_.empty() && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw DimensionMismatch("IntMatrix::append_row");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }

  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (x != 0) return false;
    }
    return true;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

inline IntMatrix operator*(const Integer& k, IntMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= k;
  return m;
}

inline IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

inline IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

/// Stacks b below a.
inline IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack");
  IntMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

/// Block-diagonal sum.
inline IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

/// Rational matrix stored as an integer numerator over one positive denominator,
/// acting on column vectors.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(IntMatrix num, Integer den = 1) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw ValidationError("RatMatrix with zero denominator");
    if (den_ < 0) {
      den_ = -den_;
      num_ = Integer(-1) * num_;
    }
    normalize();
  }

  static RatMatrix identity(std::size_t n) { return RatMatrix(IntMatrix::identity(n)); }

  static RatMatrix from_rows(std::size_t cols, const std::vector<RatVector>& rows) {
    Integer d = 1;
    for (const auto& r : rows) {
      if (r.size() != cols) throw DimensionMismatch("RatMatrix::from_rows");
      d = lcm(d, common_denominator(r));
    }
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        Rational scaled = rows[i][j] * d;
        m(i, j) = numerator(scaled);
      }
    return RatMatrix(std::move(m), d);
  }

  std::size_t rows() const { return num_.rows(); }
  std::size_t cols() const { return num_.cols(); }
  const IntMatrix& numerator_matrix() const { return num_; }
  const Integer& denominator_value() const { return den_; }

  Rational operator()(std::size_t i, std::size_t j) const { return Rational(num_(i, j), den_); }

  bool is_integral() const { return den_ == 1; }

  RatVector apply(const RatVector& v) const {
    if (v.size() != cols()) throw DimensionMismatch("RatMatrix::apply");
    RatVector out(rows());
    for (std::size_t i = 0; i < rows(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (num_(i, j) != 0) s += num_(i, j) * v[j];
      }
      out[i] = s / den_;
    }
    return out;
  }

  RatMatrix transpose() const { return RatMatrix(num_.transpose(), den_); }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    return RatMatrix(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    return RatMatrix(b.den_ * a.num_ + a.den_ * b.num_, a.den_ * b.den_);
  }
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    return RatMatrix(b.den_ * a.num_ - a.den_ * b.num_, a.den_ * b.den_);
  }
  friend RatMatrix operator*(const Rational& k, const RatMatrix& m) {
    return RatMatrix(numerator(k) * m.num_, denominator(k) * m.den_);
  }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  void normalize() {
    Integer g = den_;
    for (std::size_t i = 0; i < num_.rows() && g != 1; ++i)
      for (std::size_t j = 0; j < num_.cols() && g != 1; ++j) g = gcd(g, num_(i, j));
    if (g > 1) {
      for (std::size_t i = 0; i < num_.rows(); ++i)
        for (std::size_t j = 0; j < num_.cols(); ++j) num_(i, j) /= g;
      den_ /= g;
    }
  }

  IntMatrix num_;
  Integer den_ = 1;
};

/// Exact inverse by Gauss-Jordan over the rationals; nullopt when singular.
inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("inverse of non-square matrix");
  std::vector<RatVector> a(n, RatVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<RatVector> rows(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a[i][n + j];
  return RatMatrix::from_rows(n, rows);
}

inline Rational determinant(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("determinant of non-square matrix");
  std::vector<RatVector> a(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

inline Integer determinant(const IntMatrix& m) { return numerator(determinant(RatMatrix(m))); }

}  // namespace pi0
