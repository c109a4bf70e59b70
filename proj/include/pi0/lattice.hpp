#pragma once

#include "pi0/normal_form.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pi0 {

/// A lattice in Q^n: the Z-row-span of an integer basis, scaled by 1/denom.
///
/// Values are always canonical: the basis is in Hermite normal form and the
/// denominator shares no factor with every basis entry. Two lattices holding
/// the same point set therefore compare equal.
class Lattice {
 public:
  Lattice() = default;

  Lattice(std::size_t ambient_dim, const IntMatrix& rows, Integer denom = 1)
      : dim_(ambient_dim), denom_(std::move(denom)) {
    if (rows.rows() > 0 && rows.cols() != ambient_dim) throw DimensionMismatch("Lattice basis");
    if (denom_ <= 0) throw ValidationError("lattice denominator must be positive");
    basis_ = rows.rows() > 0 ? hnf(rows) : IntMatrix(0, ambient_dim);
    canonicalize();
  }

  static Lattice zero(std::size_t n) { return Lattice(n, IntMatrix(0, n)); }
  static Lattice standard(std::size_t n) { return Lattice(n, IntMatrix::identity(n)); }

  static Lattice from_generators(std::size_t n, const std::vector<RatVector>& gens) {
    if (gens.empty()) return zero(n);
    RatMatrix m = RatMatrix::from_rows(n, gens);
    return Lattice(n, m.numerator_matrix(), m.denominator_value());
  }

  static Lattice from_generators(std::size_t n, const std::vector<IntVector>& gens) {
    if (gens.empty()) return zero(n);
    return Lattice(n, IntMatrix::from_rows(n, gens));
  }

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.rows(); }
  bool is_full_rank() const { return rank() == dim_; }
  const IntMatrix& basis() const { return basis_; }
  const Integer& denom() const { return denom_; }

  std::vector<RatVector> generators() const {
    std::vector<RatVector> out;
    for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(to_rational(basis_.row(i), denom_));
    return out;
  }

  /// Basis rows rescaled to the common denominator d (a multiple of denom()).
  IntMatrix basis_at(const Integer& d) const {
    if (d % denom_ != 0) throw InternalError("basis_at: denominator not a multiple");
    return Integer(d / denom_) * basis_;
  }

  /// Integer coefficients of v in the canonical basis, or nullopt if v is not in the lattice.
  std::optional<IntVector> coordinates(const RatVector& v) const {
    if (v.size() != dim_) throw DimensionMismatch("lattice membership");
    IntVector w(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      Rational s = v[j] * denom_;
      if (!is_integral(s)) return std::nullopt;
      w[j] = numerator(s);
    }
    IntVector x(rank());
    auto pivots = pivot_columns(basis_);
    for (std::size_t i = 0; i < rank(); ++i) {
      const std::size_t c = pivots[i];
      const Integer& p = basis_(i, c);
      if (w[c] % p != 0) return std::nullopt;
      x[i] = w[c] / p;
      if (x[i] == 0) continue;
      for (std::size_t j = c; j < dim_; ++j) w[j] -= x[i] * basis_(i, j);
    }
    for (const auto& e : w) {
      if (e != 0) return std::nullopt;
    }
    return x;
  }

  bool contains(const RatVector& v) const { return coordinates(v).has_value(); }

  bool contains(const Lattice& other) const {
    if (other.dim_ != dim_) throw DimensionMismatch("lattice containment");
    for (const auto& g : other.generators()) {
      if (!contains(g)) return false;
    }
    return true;
  }

  /// Canonical representative of v modulo this lattice: each pivot coordinate
  /// is reduced into [0, pivot). Unique per coset when the lattice has full rank.
  RatVector reduce(const RatVector& v) const {
    if (v.size() != dim_) throw DimensionMismatch("coset reduction");
    Integer d = lcm(denom_, common_denominator(v));
    IntVector w(dim_);
    for (std::size_t j = 0; j < dim_; ++j) w[j] = numerator(v[j] * d);
    const Integer scale = d / denom_;
    auto pivots = pivot_columns(basis_);
    for (std::size_t i = 0; i < rank(); ++i) {
      const std::size_t c = pivots[i];
      Integer p = basis_(i, c) * scale;
      Integer q = floor_div(w[c], p);
      if (q == 0) continue;
      for (std::size_t j = c; j < dim_; ++j) w[j] -= q * basis_(i, j) * scale;
    }
    return to_rational(w, d);
  }

  Lattice scaled(const Rational& k) const {
    if (k == 0) return zero(dim_);
    Integer num = abs(numerator(k));
    return Lattice(dim_, num * basis_, denom_ * denominator(k));
  }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  void canonicalize() {
    Integer g = denom_;
    for (std::size_t i = 0; i < basis_.rows() && g != 1; ++i)
      for (std::size_t j = 0; j < basis_.cols() && g != 1; ++j) g = gcd(g, basis_(i, j));
    if (g > 1) {
      for (std::size_t i = 0; i < basis_.rows(); ++i)
        for (std::size_t j = 0; j < basis_.cols(); ++j) basis_(i, j) /= g;
      denom_ /= g;
    }
    if (basis_.rows() == 0) denom_ = 1;
  }

  std::size_t dim_ = 0;
  IntMatrix basis_;
  Integer denom_ = 1;
};

/// Smallest lattice containing a and b.
inline Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("lattice_sum");
  Integer d = lcm(a.denom(), b.denom());
  return Lattice(a.ambient_dim(), vstack(a.basis_at(d), b.basis_at(d)), d);
}

inline Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("lattice_intersect");
  const std::size_t n = a.ambient_dim();
  if (a.rank() == 0 || b.rank() == 0) return Lattice::zero(n);
  Integer d = lcm(a.denom(), b.denom());
  IntMatrix A = a.basis_at(d);
  IntMatrix B = b.basis_at(d);
  // x*A + y*B = 0  <=>  x*A = -y*B lies in both.
  IntMatrix K = left_kernel(vstack(A, B));
  IntMatrix rows(0, n);
  for (std::size_t i = 0; i < K.rows(); ++i) {
    IntVector v(n);
    for (std::size_t k = 0; k < A.rows(); ++k) {
      if (K(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] += K(i, k) * A(k, j);
    }
    rows.append_row(v);
  }
  return Lattice(n, rows, d);
}

/// {v in l : a v = 0}.
inline Lattice kernel_lattice(const Lattice& l, const RatMatrix& a) {
  const std::size_t n = l.ambient_dim();
  if (a.cols() != n) throw DimensionMismatch("kernel_lattice");
  if (l.rank() == 0) return l;
  const IntMatrix& B = l.basis();
  IntMatrix K = left_kernel(B * a.numerator_matrix().transpose());
  if (K.rows() == 0) return Lattice::zero(n);
  return Lattice(n, K * B, l.denom());
}

inline Lattice kernel_lattice(const Lattice& l, const IntMatrix& a) { return kernel_lattice(l, RatMatrix(a)); }

/// The image a(l) for a rational n x n matrix acting on column vectors.
inline Lattice image_lattice(const Lattice& l, const RatMatrix& a) {
  const std::size_t n = l.ambient_dim();
  if (a.rows() != n || a.cols() != n) throw DimensionMismatch("image_lattice");
  if (l.rank() == 0) return l;
  return Lattice(n, l.basis() * a.numerator_matrix().transpose(), l.denom() * a.denominator_value());
}

inline bool membership(const RatVector& v, const Lattice& l) { return l.contains(v); }

/// Block direct sum of lattices in Q^(n+m).
inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
  Integer d = lcm(a.denom(), b.denom());
  const std::size_t n = a.ambient_dim() + b.ambient_dim();
  IntMatrix A = a.basis_at(d);
  IntMatrix B = b.basis_at(d);
  IntMatrix rows(A.rows() + B.rows(), n);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim(); ++j) rows(i, j) = A(i, j);
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < b.ambient_dim(); ++j) rows(A.rows() + i, a.ambient_dim() + j) = B(i, j);
  return Lattice(n, rows, d);
}

inline std::string to_string(const Lattice& l) {
  std::string s = "Lattice(dim=" + std::to_string(l.ambient_dim()) + ", denom=" + to_string(l.denom()) + ", rows=[";
  for (std::size_t i = 0; i < l.rank(); ++i) {
    if (i) s += ", ";
    s += to_string(to_rational(l.basis().row(i)));
  }
  return s + "])";
}

}  // namespace pi0
