#pragma once

#include "pi0/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace pi0 {

namespace detail {

// Row-style echelon reduction in place. Returns the pivot columns, one per
// nonzero row; rows past the returned count are zero.
inline std::vector<std::size_t> echelonize(IntMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t p = 0;
  for (std::size_t j = 0; j < a.cols() && p < a.rows(); ++j) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = p; i < a.rows(); ++i) {
        if (a(i, j) == 0) continue;
        if (!best || abs(a(i, j)) < abs(a(*best, j))) best = i;
      }
      if (!best) break;
      a.swap_rows(p, *best);
      bool clean = true;
      for (std::size_t i = p + 1; i < a.rows(); ++i) {
        if (a(i, j) == 0) continue;
        a.add_row_multiple(i, p, -(a(i, j) / a(p, j)));
        if (a(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(p, j) == 0) continue;
    if (a(p, j) < 0) a.negate_row(p);
    for (std::size_t i = 0; i < p; ++i) a.add_row_multiple(i, p, -floor_div(a(i, j), a(p, j)));
    pivots.push_back(j);
    ++p;
  }
  return pivots;
}

}  // namespace detail

/// Row-style Hermite normal form with zero rows removed. Pivots are positive
/// and the entries above each pivot lie in [0, pivot).
inline IntMatrix hnf(const IntMatrix& m) {
  IntMatrix a = m;
  auto pivots = detail::echelonize(a);
  IntMatrix out(pivots.size(), a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

/// Pivot column of each row of a matrix already in echelon form.
inline std::vector<std::size_t> pivot_columns(const IntMatrix& h) {
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t j = 0;
    while (j < h.cols() && h(i, j) == 0) ++j;
    pivots.push_back(j);
  }
  return pivots;
}

/// Basis (rows) of the integer left kernel {x : x * m = 0}, in HNF.
inline IntMatrix left_kernel(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntMatrix aug(r, c + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) aug(i, j) = m(i, j);
    aug(i, c + i) = 1;
  }
  auto pivots = detail::echelonize(aug);
  IntMatrix out(0, r);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < c) continue;
    IntVector row(r);
    for (std::size_t j = 0; j < r; ++j) row[j] = aug(i, c + j);
    out.append_row(row);
  }
  return hnf(out);
}

struct SmithForm {
  /// Diagonal entries d_1 | d_2 | ..., zeros trailing; length min(rows, cols).
  IntVector diagonal;
  /// U * m * V = diag(diagonal).
  IntMatrix U;
  IntMatrix V;
  /// Exact inverse of V, tracked alongside the column operations.
  IntMatrix V_inverse;
};

inline SmithForm snf(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  SmithForm out{{}, IntMatrix::identity(rows), IntMatrix::identity(cols), IntMatrix::identity(cols)};
  auto& U = out.U;
  auto& V = out.V;
  auto& Vi = out.V_inverse;
  const std::size_t steps = std::min(rows, cols);

  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    a.add_col_multiple(dst, src, k);
    V.add_col_multiple(dst, src, k);
    Vi.add_row_multiple(src, dst, -k);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    V.swap_cols(x, y);
    Vi.swap_rows(x, y);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    a.add_row_multiple(dst, src, k);
    U.add_row_multiple(dst, src, k);
  };

  for (std::size_t t = 0; t < steps; ++t) {
    bool any = false;
    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (!best || abs(a(i, j)) < abs(a(best->first, best->second))) best = {i, j};
        }
      if (!best) break;
      any = true;
      a.swap_rows(t, best->first);
      U.swap_rows(t, best->first);
      col_swap(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row_add(i, t, -(a(i, t) / a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col_add(j, t, -(a(t, j) / a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            offender = i;
            break;
          }
        }
      if (!offender) break;
      row_add(t, *offender, 1);
    }
    if (!any) break;
    if (a(t, t) < 0) {
      a.negate_row(t);
      U.negate_row(t);
    }
  }
  out.diagonal.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = a(t, t);
  return out;
}

}  // namespace pi0
