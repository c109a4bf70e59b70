#pragma once

#include "pi0/root_datum.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pi0 {

/// The Cartan involution restricted to a maximal torus, as its action on the
/// cocharacter lattice (column vectors, datum coordinates).
///
/// The real structure acts on cocharacters as -theta; only theta is stored.
/// The +1 eigenspace holds the compact directions, the -1 eigenspace the split ones.
struct Involution {
  RatMatrix theta;
  std::string name;
};

namespace detail {

inline RatMatrix require_square(const RootDatum& rd, const RatMatrix& m) {
  if (m.rows() != rd.rank || m.cols() != rd.rank) throw DimensionMismatch("involution matrix");
  return m;
}

inline void check_involution(const RootDatum& rd, const RatMatrix& theta) {
  const std::size_t n = rd.rank;
  if (theta * theta != RatMatrix::identity(n)) throw ValidationError("not an involution");
  if (image_lattice(rd.cochar, theta) != rd.cochar) throw ValidationError("theta not integral on cocharacter lattice");
  if (image_lattice(rd.coroots, theta) != rd.coroots) throw ValidationError("does not preserve coroot lattice");
  if (rd.coroot_generators.empty()) return;
  std::set<RatVector> coroots(rd.coroot_generators.begin(), rd.coroot_generators.end());
  for (const auto& a : rd.coroot_generators) {
    RatVector image = theta.apply(a);
    if (coroots.count(image) || coroots.count(Rational(-1) * image)) continue;
    throw ValidationError("does not normalize coroot set");
  }
}

}  // namespace detail

inline Involution involution_from_matrix(const RootDatum& rd, const RatMatrix& m, std::string name = "") {
  detail::check_involution(rd, detail::require_square(rd, m));
  return Involution{m, std::move(name)};
}

inline Involution involution_from_matrix(const RootDatum& rd, const IntMatrix& m, std::string name = "") {
  return involution_from_matrix(rd, RatMatrix(m), std::move(name));
}

/// theta = P_cmp - P_spl for the decomposition Q^n = span(split) + span(compact).
inline Involution involution_from_eigenspaces(const RootDatum& rd, const std::vector<RatVector>& split_span,
                                              const std::vector<RatVector>& compact_span, std::string name = "") {
  const std::size_t n = rd.rank;
  if (split_span.size() + compact_span.size() != n) throw ValidationError("spans not complementary");
  std::vector<RatVector> columns = split_span;
  columns.insert(columns.end(), compact_span.begin(), compact_span.end());
  for (const auto& c : columns) {
    if (c.size() != n) throw DimensionMismatch("eigenspace vector");
  }
  // B has the eigenvectors as columns; theta = B D B^-1.
  RatMatrix B = RatMatrix::from_rows(n, columns).transpose();
  auto B_inv = inverse(B);
  if (!B_inv) throw ValidationError("spans not complementary");
  IntMatrix D(n, n);
  for (std::size_t i = 0; i < n; ++i) D(i, i) = i < split_span.size() ? -1 : 1;
  RatMatrix theta = B * RatMatrix(D) * *B_inv;
  detail::check_involution(rd, theta);
  return Involution{theta, std::move(name)};
}

inline Involution split_involution(std::size_t n) {
  return Involution{Rational(-1) * RatMatrix::identity(n), "split"};
}

inline Involution compact_involution(std::size_t n) { return Involution{RatMatrix::identity(n), "compact"}; }

inline Involution change_basis(const Involution& inv, const IntMatrix& g) {
  RatMatrix G(g);
  auto g_inv = inverse(G);
  if (!g_inv) throw ValidationError("change of basis is singular");
  return Involution{G * inv.theta * *g_inv, inv.name};
}

inline Involution direct_sum(const Involution& a, const Involution& b) {
  const Integer d = lcm(a.theta.denominator_value(), b.theta.denominator_value());
  IntMatrix A = Integer(d / a.theta.denominator_value()) * a.theta.numerator_matrix();
  IntMatrix B = Integer(d / b.theta.denominator_value()) * b.theta.numerator_matrix();
  return Involution{RatMatrix(direct_sum(A, B), d), a.name + " + " + b.name};
}

enum class E7Form { EV, EVI, EVII };

inline std::string to_string(E7Form f) {
  switch (f) {
    case E7Form::EV:
      return "EV";
    case E7Form::EVI:
      return "EVI";
    case E7Form::EVII:
      return "EVII";
  }
  return "?";
}

/// Non-compact real forms of adjoint E7. EVII uses the split coweights w1, w2, w6
/// and compact coroots a3, a4, a5, a7; EVI takes the split span w2, w4, w5, w6
/// and its orthogonal complement under the invariant form.
inline std::pair<RootDatum, Involution> e7_preset(E7Form form) {
  RootDatum rd = e7_adjoint_datum();
  rd.name = "E7 adj " + to_string(form);
  auto w = [](std::size_t i) { return e7_fundamental_coweight(i); };
  auto a = [](std::size_t i) { return e7_simple_coroot(i); };
  switch (form) {
    case E7Form::EV: {
      auto inv = split_involution(7);
      detail::check_involution(rd, inv.theta);
      inv.name = "EV";
      return {rd, inv};
    }
    case E7Form::EVII:
      return {rd, involution_from_eigenspaces(rd, {w(1), w(2), w(6)}, {a(3), a(4), a(5), a(7)}, "EVII")};
    case E7Form::EVI: {
      std::vector<RatVector> split = {w(2), w(4), w(5), w(6)};
      // Complement: {x : <s, x> = 0 for every split s} = ker(S * Gram).
      RatMatrix gram = e7_gram_matrix();
      std::vector<RatVector> rows;
      for (const auto& s : split) rows.push_back(gram.transpose().apply(s));
      Lattice complement = kernel_lattice(Lattice::standard(7), RatMatrix::from_rows(7, rows));
      if (complement.rank() != 3) throw InternalError("EVI compact complement has wrong rank");
      return {rd, involution_from_eigenspaces(rd, split, complement.generators(), "EVI")};
    }
  }
  throw InternalError("unknown E7 form");
}

}  // namespace pi0
