#pragma once

#include "pi0/lattice.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pi0 {

class NotSublattice : public ValidationError {
 public:
  NotSublattice() : ValidationError("not a sublattice") {}
};

class BoundExceeded : public ValidationError {
 public:
  explicit BoundExceeded(std::size_t bound)
      : ValidationError("coset enumeration exceeded bound " + std::to_string(bound)) {}
};

class InfiniteIndex : public ValidationError {
 public:
  InfiniteIndex() : ValidationError("infinite index: sublattice has lower rank") {}
};

/// Structure of sup/sub as Z/d_1 + ... + Z/d_k + Z^free_rank.
struct QuotientStructure {
  /// Divisibility chain of factors >= 2.
  IntVector invariant_factors;
  std::size_t free_rank = 0;
  /// Torsion generators (one per invariant factor, same order) followed by
  /// free generators; each reduced modulo sub.
  std::vector<RatVector> generators;
  Lattice sub;
  Lattice sup;

  // class(v) = coords_sup(v) * adapted, read off at the torsion and free columns.
  IntMatrix adapted;
  std::vector<std::size_t> torsion_columns;
  std::vector<std::size_t> free_columns;

  bool is_finite() const { return free_rank == 0; }

  /// Group order; nullopt if infinite.
  std::optional<Integer> order() const {
    if (!is_finite()) return std::nullopt;
    Integer o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
  }

  /// Class of v in sup/sub: residues modulo each invariant factor, then free coordinates.
  IntVector classify(const RatVector& v) const {
    auto x = sup.coordinates(v);
    if (!x) throw ValidationError("vector " + to_string(v) + " is not in the super-lattice");
    IntVector y(adapted.cols());
    for (std::size_t i = 0; i < x->size(); ++i) {
      if ((*x)[i] == 0) continue;
      for (std::size_t j = 0; j < adapted.cols(); ++j) y[j] += (*x)[i] * adapted(i, j);
    }
    IntVector out;
    for (std::size_t k = 0; k < torsion_columns.size(); ++k)
      out.push_back(mod_floor(y[torsion_columns[k]], invariant_factors[k]));
    for (std::size_t c : free_columns) out.push_back(y[c]);
    return out;
  }
};

/// Structure of sup/sub via the Smith normal form of the inclusion matrix.
inline QuotientStructure quotient_structure(const Lattice& sub, const Lattice& sup) {
  if (sub.ambient_dim() != sup.ambient_dim()) throw DimensionMismatch("quotient_structure");
  const std::size_t r_sub = sub.rank();
  const std::size_t r_sup = sup.rank();
  IntMatrix inclusion(r_sub, r_sup);
  std::size_t i = 0;
  for (const auto& g : sub.generators()) {
    auto x = sup.coordinates(g);
    if (!x) throw NotSublattice();
    for (std::size_t j = 0; j < r_sup; ++j) inclusion(i, j) = (*x)[j];
    ++i;
  }

  QuotientStructure q;
  q.sub = sub;
  q.sup = sup;
  q.free_rank = r_sup - r_sub;

  SmithForm s = snf(inclusion);
  q.adapted = s.V;
  // Row i of V^-1 * basis(sup) is the i-th adapted basis vector of sup; sub is
  // spanned by d_i times those vectors.
  IntMatrix adapted_basis = s.V_inverse * sup.basis();
  auto adapted_vector = [&](std::size_t k) { return sub.reduce(to_rational(adapted_basis.row(k), sup.denom())); };
  for (std::size_t k = 0; k < r_sub; ++k) {
    if (s.diagonal[k] == 0) throw InternalError("sub-lattice basis is not independent");
    if (s.diagonal[k] == 1) continue;
    q.invariant_factors.push_back(s.diagonal[k]);
    q.torsion_columns.push_back(k);
    q.generators.push_back(adapted_vector(k));
  }
  for (std::size_t k = r_sub; k < r_sup; ++k) {
    q.free_columns.push_back(k);
    q.generators.push_back(adapted_vector(k));
  }
  return q;
}

/// Index [sup : sub]; throws InfiniteIndex if not finite.
inline Integer lattice_index(const Lattice& sub, const Lattice& sup) {
  auto q = quotient_structure(sub, sup);
  auto o = q.order();
  if (!o) throw InfiniteIndex();
  return *o;
}

namespace detail {

inline std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> ps;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace detail

/// Independent oracle for quotient_structure on finite-index pairs.
///
/// Enumerates the cosets of sub in sup by closing {0} under addition of the
/// sup basis vectors (cosets keyed by their reduction modulo sub), then counts
/// for every prime power p^k how many cosets are killed by p^k, testing
/// membership of p^k * v in sub directly. Those counts determine each
/// p-primary partition and hence the invariant factors. The returned
/// generators are the nonzero classes of the sup basis (a generating set, not
/// an adapted basis).
inline QuotientStructure brute_force_quotient(const Lattice& sub, const Lattice& sup, std::size_t bound) {
  if (sub.ambient_dim() != sup.ambient_dim()) throw DimensionMismatch("brute_force_quotient");
  if (!sup.contains(sub)) throw NotSublattice();
  if (sub.rank() < sup.rank()) throw InfiniteIndex();

  const auto sup_gens = sup.generators();
  std::set<RatVector> seen;
  std::vector<RatVector> cosets;
  std::deque<RatVector> frontier;
  RatVector origin(sup.ambient_dim());
  seen.insert(origin);
  cosets.push_back(origin);
  frontier.push_back(origin);
  while (!frontier.empty()) {
    RatVector v = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : sup_gens) {
      RatVector w = sub.reduce(v + g);
      if (seen.insert(w).second) {
        if (seen.size() > bound) throw BoundExceeded(bound);
        cosets.push_back(w);
        frontier.push_back(std::move(w));
      }
    }
  }

  const Integer index = cosets.size();
  // partitions[p] = parts of the p-primary component, as exponents.
  std::map<Integer, std::vector<std::size_t>> partitions;
  for (const auto& p : detail::prime_factors(index)) {
    std::vector<std::size_t> at_least;  // at_least[k-1] = #{parts >= k}
    std::size_t prev_log = 0;
    Integer pk = p;
    while (true) {
      std::size_t killed = 0;
      for (const auto& v : cosets) {
        if (sub.contains(Rational(pk) * v)) ++killed;
      }
      std::size_t log = 0;
      Integer c = killed;
      while (c % p == 0) {
        c /= p;
        ++log;
      }
      if (c != 1) throw InternalError("p-torsion count is not a power of p");
      if (log == prev_log) break;
      at_least.push_back(log - prev_log);
      prev_log = log;
      pk *= p;
    }
    std::vector<std::size_t> parts(at_least.empty() ? 0 : at_least.front(), 0);
    for (std::size_t k = 0; k < at_least.size(); ++k)
      for (std::size_t j = 0; j < at_least[k]; ++j) ++parts[j];
    partitions[p] = parts;  // descending
  }

  std::size_t count = 0;
  for (const auto& [p, parts] : partitions) count = std::max(count, parts.size());
  IntVector factors(count, Integer(1));
  for (const auto& [p, parts] : partitions) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      Integer pe = 1;
      for (std::size_t e = 0; e < parts[j]; ++e) pe *= p;
      factors[count - 1 - j] *= pe;
    }
  }

  QuotientStructure q;
  q.invariant_factors = factors;
  q.sub = sub;
  q.sup = sup;
  for (const auto& g : sup_gens) {
    RatVector w = sub.reduce(g);
    if (!sub.contains(w)) q.generators.push_back(w);
  }
  return q;
}

}  // namespace pi0
