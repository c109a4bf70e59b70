#pragma once

#include "pi0/real_form.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pi0 {

/// The lattices attached to (X, Q, theta). Projections nu -> nu_spl = (nu - theta nu)/2
/// and nu -> nu_cmp = (nu + theta nu)/2 define the tilde lattices.
struct SplitLattices {
  Lattice Xspl;        // X cap ker(theta + 1)
  Lattice Xcmp;        // X cap ker(theta - 1)
  Lattice Xtilde_spl;  // image of X under nu -> nu_spl
  Lattice Xtilde_cmp;  // image of X under nu -> nu_cmp
  Lattice Qspl;
  Lattice Qcmp;
};

inline RatMatrix split_projection(const Involution& inv) {
  const std::size_t n = inv.theta.rows();
  return Rational(1, 2) * (RatMatrix::identity(n) - inv.theta);
}

inline RatMatrix compact_projection(const Involution& inv) {
  const std::size_t n = inv.theta.rows();
  return Rational(1, 2) * (RatMatrix::identity(n) + inv.theta);
}

inline SplitLattices split_lattices(const RootDatum& rd, const Involution& inv) {
  const std::size_t n = rd.rank;
  if (inv.theta.rows() != n) throw DimensionMismatch("split_lattices");
  const RatMatrix plus = inv.theta + RatMatrix::identity(n);
  const RatMatrix minus = inv.theta - RatMatrix::identity(n);
  return SplitLattices{
      kernel_lattice(rd.cochar, plus),
      kernel_lattice(rd.cochar, minus),
      image_lattice(rd.cochar, split_projection(inv)),
      image_lattice(rd.cochar, compact_projection(inv)),
      kernel_lattice(rd.coroots, plus),
      kernel_lattice(rd.coroots, minus),
  };
}

/// An elementary abelian 2-group presented as sup/sub, with a chosen F2-basis
/// of coset representatives.
struct Elementary2Group {
  std::size_t rank = 0;
  std::vector<RatVector> generators;
  /// Name of the distinguished vector used for each generator, or empty.
  std::vector<std::string> labels;
  QuotientStructure quotient;

  Integer order() const { return Integer(1) << rank; }
  const Lattice& sub() const { return quotient.sub; }
  const Lattice& sup() const { return quotient.sup; }

  /// Class of v as a bit vector over F2 in the adapted basis of the quotient.
  std::vector<bool> classify(const RatVector& v) const {
    IntVector c = quotient.classify(v);
    std::vector<bool> bits(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) bits[i] = c[i] != 0;
    return bits;
  }
};

namespace detail {

// Gaussian elimination over F2; keeps `basis` reduced and returns false if v
// is already in its span.
inline bool insert_independent(std::vector<std::vector<bool>>& basis, std::vector<bool> v) {
  for (const auto& b : basis) {
    std::size_t lead = 0;
    while (lead < b.size() && !b[lead]) ++lead;
    if (lead < v.size() && v[lead]) {
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] != b[i];
    }
  }
  bool nonzero = false;
  for (bool x : v) nonzero = nonzero || x;
  if (!nonzero) return false;
  std::size_t lead = 0;
  while (!v[lead]) ++lead;
  for (auto& b : basis) {
    if (b[lead]) {
      for (std::size_t i = 0; i < b.size(); ++i) b[i] = b[i] != v[i];
    }
  }
  basis.push_back(std::move(v));
  return true;
}

}  // namespace detail

/// Builds sup/sub, asserts it is elementary abelian of exponent <= 2, and picks
/// generators: distinguished vectors of the datum first (in their listed order),
/// then the canonical reduced generators of the quotient.
inline Elementary2Group elementary_2_group(const Lattice& sub, const Lattice& sup, const RootDatum& rd,
                                           const std::string& what) {
  Elementary2Group g;
  g.quotient = quotient_structure(sub, sup);
  if (!g.quotient.is_finite()) throw InternalError(what + " quotient is infinite");
  for (const auto& d : g.quotient.invariant_factors) {
    if (d != 2) throw InternalError(what + " has invariant factor " + to_string(d) + " (expected 2)");
  }
  g.rank = g.quotient.invariant_factors.size();

  std::vector<std::vector<bool>> span;
  auto offer = [&](const RatVector& v, const std::string& label) {
    if (g.generators.size() == g.rank || !sup.contains(v)) return;
    if (detail::insert_independent(span, g.classify(v))) {
      g.generators.push_back(v);
      g.labels.push_back(label);
    }
  };
  for (const auto& nv : rd.named_vectors) offer(nv.vector, nv.label);
  for (const auto& v : g.quotient.generators) offer(v, "");
  if (g.generators.size() != g.rank) throw InternalError(what + ": failed to complete a generating set");
  return g;
}

/// pi0 G(R) = X_spl / (2 Xtilde_spl + Q_spl).
inline Elementary2Group pi0(const RootDatum& rd, const Involution& inv) {
  auto L = split_lattices(rd, inv);
  Lattice sub = lattice_sum(L.Xtilde_spl.scaled(2), L.Qspl);
  return elementary_2_group(sub, L.Xspl, rd, "pi0");
}

/// Numerator X cap (Xtilde_spl + Q_cmp/2) and denominator 2 Xtilde_spl + Q of H^1(R, iX/iQ).
struct H1Lattices {
  Lattice numerator;
  Lattice denominator;
};

inline H1Lattices h1_lattices(const RootDatum& rd, const Involution& inv) {
  auto L = split_lattices(rd, inv);
  return H1Lattices{
      lattice_intersect(rd.cochar, lattice_sum(L.Xtilde_spl, L.Qcmp.scaled(Rational(1, 2)))),
      lattice_sum(L.Xtilde_spl.scaled(2), rd.coroots),
  };
}

inline Elementary2Group h1_pi1(const RootDatum& rd, const Involution& inv) {
  auto h = h1_lattices(rd, inv);
  return elementary_2_group(h.denominator, h.numerator, rd, "H1");
}

namespace detail {

inline void require_in_cochar(const RootDatum& rd, const RatVector& nu) {
  if (nu.size() != rd.rank) throw DimensionMismatch("cocharacter");
  if (!rd.cochar.contains(nu)) throw ValidationError("nu " + to_string(nu) + " is not in the cocharacter lattice");
}

}  // namespace detail

/// i nu + iQ is a 1-cocycle iff nu_cmp lies in Q_cmp / 2.
inline bool cocycle_check(const RootDatum& rd, const Involution& inv, const RatVector& nu) {
  detail::require_in_cochar(rd, nu);
  auto L = split_lattices(rd, inv);
  return L.Qcmp.scaled(Rational(1, 2)).contains(compact_projection(inv).apply(nu));
}

/// i nu + iQ is a 1-coboundary iff nu lies in 2 Xtilde_spl + Q.
inline bool coboundary_check(const RootDatum& rd, const Involution& inv, const RatVector& nu) {
  detail::require_in_cochar(rd, nu);
  return h1_lattices(rd, inv).denominator.contains(nu);
}

/// Verifies that pi0 embeds into H^1(R, iX/iQ): the 2^k subset sums of the pi0
/// generators land in the H^1 numerator and have pairwise distinct classes.
inline bool kernel_embedding_check(const RootDatum& rd, const Involution& inv) {
  auto p = pi0(rd, inv);
  auto h = h1_pi1(rd, inv);
  if (p.rank > h.rank) return false;
  std::set<std::vector<bool>> images;
  const std::size_t count = std::size_t{1} << p.rank;
  for (std::size_t mask = 0; mask < count; ++mask) {
    RatVector nu(rd.rank, Rational(0));
    for (std::size_t i = 0; i < p.rank; ++i) {
      if (mask & (std::size_t{1} << i)) nu = nu + p.generators[i];
    }
    if (!h.sup().contains(nu)) return false;
    if (!images.insert(h.classify(nu)).second) return false;
  }
  return true;
}

inline Elementary2Group torus_pi0(std::size_t rank, const Involution& inv) {
  RootDatum rd = torus_datum(rank);
  return pi0(rd, involution_from_matrix(rd, inv.theta, inv.name));
}

/// Exact fourth roots of unity exp(pi i k / 2), k mod 4.
enum class FourthRoot { One = 0, I = 1, MinusOne = 2, MinusI = 3 };

inline std::string to_string(FourthRoot r) {
  switch (r) {
    case FourthRoot::One:
      return "1";
    case FourthRoot::I:
      return "i";
    case FourthRoot::MinusOne:
      return "-1";
    case FourthRoot::MinusI:
      return "-i";
  }
  return "?";
}

inline FourthRoot parse_fourth_root(const std::string& s) {
  if (s == "1") return FourthRoot::One;
  if (s == "i") return FourthRoot::I;
  if (s == "-1") return FourthRoot::MinusOne;
  if (s == "-i") return FourthRoot::MinusI;
  throw ValidationError("not a fourth root of unity: '" + s + "'");
}

struct Evaluation {
  std::string label;
  FourthRoot value;

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

/// The element t = exp(pi i nu) of order dividing 2 in T_spl(R), recorded by
/// nu and the values lambda(t) = exp(pi i <lambda, nu>) of the display weights.
struct Representative {
  RatVector nu;
  std::string label;
  std::vector<Evaluation> evaluations;
  std::string note;

  friend bool operator==(const Representative&, const Representative&) = default;
};

inline Representative representative(const RootDatum& rd, const Involution& inv, const RatVector& nu,
                                     std::string label = "") {
  if (nu.size() != rd.rank) throw DimensionMismatch("representative");
  if (!split_lattices(rd, inv).Xspl.contains(nu))
    throw ValidationError("nu " + to_string(nu) + " is not in the split cocharacter lattice");
  Representative r{nu, std::move(label), {}, rd.note};
  for (const auto& w : rd.display_weights) {
    Rational twice = 2 * dot(w.vector, nu);
    if (!is_integral(twice))
      throw ValidationError("pairing of weight '" + w.label + "' with " + to_string(nu) + " is not half-integral");
    auto k = static_cast<int>(mod_floor(numerator(twice), 4));
    r.evaluations.push_back({w.label, static_cast<FourthRoot>(k)});
  }
  return r;
}

/// One representative per nonidentity element: subset sums of the generators,
/// in binary-counting order of the subsets.
inline std::vector<Representative> representatives(const RootDatum& rd, const Involution& inv,
                                                   const Elementary2Group& g) {
  std::vector<Representative> out;
  const std::size_t count = std::size_t{1} << g.rank;
  for (std::size_t mask = 1; mask < count; ++mask) {
    RatVector nu(rd.rank, Rational(0));
    std::string label;
    bool labelled = true;
    for (std::size_t i = 0; i < g.rank; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      nu = nu + g.generators[i];
      if (g.labels[i].empty()) labelled = false;
      label += (label.empty() ? "" : "+") + g.labels[i];
    }
    out.push_back(representative(rd, inv, nu, labelled ? label : ""));
  }
  return out;
}

}  // namespace pi0
