#pragma once

#include "pi0/quotient.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pi0 {

/// A rational vector with a human-readable label ("e1", "w7", "eps3", ...).
struct NamedVector {
  std::string label;
  RatVector vector;

  friend bool operator==(const NamedVector&, const NamedVector&) = default;
};

enum class DatumKind { General, Torus, Semisimple };

/// Torus data of a connected reductive complex group: the cocharacter lattice
/// X and the coroot lattice Q inside a common coordinate space Q^rank.
///
/// Coordinates are chosen per group so that the standard formulas read
/// naturally (the e_i basis for GL/SO/PSO, e_1..e_7 for E7); X need not be
/// the standard lattice.
struct RootDatum {
  std::string name;
  std::size_t rank = 0;
  Lattice cochar;
  Lattice coroots;
  /// The full set of coroots (closed under negation) when known; an involution
  /// must permute it up to sign.
  std::vector<RatVector> coroot_generators;
  /// Characters used to print torus elements, one per diagonal matrix entry.
  std::vector<NamedVector> display_weights;
  /// Distinguished cocharacters, preferred as generator labels in this order.
  std::vector<NamedVector> named_vectors;
  /// Set for isogeny quotients whose display weights are characters of a cover.
  std::string note;
  DatumKind kind = DatumKind::General;
};

inline std::vector<std::string> validate(const RootDatum& rd) {
  std::vector<std::string> problems;
  const std::size_t n = rd.rank;
  if (rd.cochar.ambient_dim() != n || rd.coroots.ambient_dim() != n) {
    problems.push_back("lattice dimension differs from rank");
    return problems;
  }
  if (!rd.cochar.is_full_rank()) problems.push_back("cocharacter lattice is not of full rank");
  for (const auto& g : rd.coroots.generators()) {
    if (!rd.cochar.contains(g)) {
      problems.push_back("coroot lattice not contained in cocharacter lattice");
      break;
    }
  }
  for (const auto& a : rd.coroot_generators) {
    if (a.size() != n) {
      problems.push_back("coroot generator has wrong dimension");
      continue;
    }
    if (!rd.cochar.contains(a)) problems.push_back("coroot not in cocharacter lattice: " + to_string(a));
    if (!rd.coroots.contains(a)) problems.push_back("coroot generator not in coroot lattice: " + to_string(a));
  }
  if (!rd.coroot_generators.empty() && Lattice::from_generators(n, rd.coroot_generators) != rd.coroots)
    problems.push_back("coroot generators do not span the coroot lattice");
  for (const auto& w : rd.display_weights) {
    if (w.vector.size() != n) problems.push_back("display weight '" + w.label + "' has wrong dimension");
  }
  for (const auto& w : rd.named_vectors) {
    if (w.vector.size() != n) problems.push_back("named vector '" + w.label + "' has wrong dimension");
  }
  if (rd.kind == DatumKind::Torus && (rd.coroots.rank() != 0 || !rd.coroot_generators.empty()))
    problems.push_back("torus datum has nonempty coroots");
  if (rd.kind == DatumKind::Semisimple && rd.coroots.rank() != n)
    problems.push_back("semisimple datum has coroot lattice of lower rank");
  return problems;
}

inline void require_valid(const RootDatum& rd) {
  auto problems = validate(rd);
  if (problems.empty()) return;
  std::string msg = "invalid root datum '" + rd.name + "': " + problems.front();
  for (std::size_t i = 1; i < problems.size(); ++i) msg += "; " + problems[i];
  throw ValidationError(msg);
}

namespace detail {

inline RatVector concat(const RatVector& a, const RatVector& b) {
  RatVector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline RatVector pad(const RatVector& v, std::size_t before, std::size_t after) {
  RatVector out(before, Rational(0));
  out.insert(out.end(), v.begin(), v.end());
  out.resize(out.size() + after, Rational(0));
  return out;
}

inline RatVector unit(std::size_t n, std::size_t i, long value = 1) {
  RatVector v(n, Rational(0));
  v[i] = value;
  return v;
}

}  // namespace detail

/// Block-diagonal product of two data.
inline RootDatum product(const RootDatum& a, const RootDatum& b) {
  if (a.rank == 0) return b;
  if (b.rank == 0) return a;
  RootDatum out;
  out.name = a.name + " x " + b.name;
  out.rank = a.rank + b.rank;
  out.cochar = direct_sum(a.cochar, b.cochar);
  out.coroots = direct_sum(a.coroots, b.coroots);
  for (const auto& c : a.coroot_generators) out.coroot_generators.push_back(detail::pad(c, 0, b.rank));
  for (const auto& c : b.coroot_generators) out.coroot_generators.push_back(detail::pad(c, a.rank, 0));
  for (const auto& w : a.display_weights) out.display_weights.push_back({w.label, detail::pad(w.vector, 0, b.rank)});
  for (const auto& w : b.display_weights)
    out.display_weights.push_back({"[2]" + w.label, detail::pad(w.vector, a.rank, 0)});
  for (const auto& w : a.named_vectors) out.named_vectors.push_back({w.label, detail::pad(w.vector, 0, b.rank)});
  for (const auto& w : b.named_vectors)
    out.named_vectors.push_back({"[2]" + w.label, detail::pad(w.vector, a.rank, 0)});
  out.note = a.note.empty() ? b.note : a.note;
  if (a.kind == b.kind) out.kind = a.kind;
  return out;
}

/// Re-expresses the datum in new coordinates v -> g v for unimodular g.
/// Covectors (display weights) transform by the inverse transpose.
inline RootDatum change_basis(const RootDatum& rd, const IntMatrix& g) {
  if (g.rows() != rd.rank || g.cols() != rd.rank) throw DimensionMismatch("change_basis");
  RatMatrix G(g);
  auto g_inv = inverse(G);
  if (!g_inv || !g_inv->is_integral()) throw ValidationError("change of basis is not unimodular");
  RootDatum out = rd;
  out.cochar = image_lattice(rd.cochar, G);
  out.coroots = image_lattice(rd.coroots, G);
  for (auto& c : out.coroot_generators) c = G.apply(c);
  for (auto& w : out.named_vectors) w.vector = G.apply(w.vector);
  RatMatrix g_inv_t = g_inv->transpose();
  for (auto& w : out.display_weights) w.vector = g_inv_t.apply(w.vector);
  return out;
}

// --- Cartan-matrix construction for simple types ---------------------------

enum class Isogeny { SimplyConnected, Adjoint };

/// Cartan matrix with entries a_ij = <alpha_i^vee, alpha_j> in Bourbaki numbering.
inline IntMatrix cartan_matrix(char type, std::size_t r) {
  auto bad = [&]() {
    return ValidationError("invalid Cartan type " + std::string(1, type) + std::to_string(r));
  };
  IntMatrix a(r, r);
  auto chain = [&](std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
      a(i, i) = 2;
      if (i + 1 < len) a(i, i + 1) = a(i + 1, i) = -1;
    }
  };
  switch (type) {
    case 'A':
      if (r < 1) throw bad();
      chain(r);
      break;
    case 'B':
      if (r < 2) throw bad();
      chain(r);
      a(r - 1, r - 2) = -2;
      break;
    case 'C':
      if (r < 2) throw bad();
      chain(r);
      a(r - 2, r - 1) = -2;
      break;
    case 'D':
      if (r < 3) throw bad();
      chain(r - 1);
      a(r - 1, r - 1) = 2;
      a(r - 1, r - 3) = a(r - 3, r - 1) = -1;
      break;
    case 'E': {
      if (r < 6 || r > 8) throw bad();
      // 1-3-4-5-...-r chain with 2 attached to 4.
      for (std::size_t i = 0; i < r; ++i) a(i, i) = 2;
      auto link = [&](std::size_t x, std::size_t y) { a(x - 1, y - 1) = a(y - 1, x - 1) = -1; };
      link(1, 3);
      link(2, 4);
      for (std::size_t i = 3; i < r; ++i) link(i, i + 1);
      break;
    }
    case 'F':
      if (r != 4) throw bad();
      chain(4);
      a(2, 1) = -2;
      break;
    case 'G':
      if (r != 2) throw bad();
      chain(2);
      a(0, 1) = -3;
      break;
    default:
      throw bad();
  }
  return a;
}

/// All coroots, in simple-coroot coordinates, by closing the simple coroots
/// under the simple reflections s_j(b) = b - <alpha_j, b> alpha_j^vee.
inline std::vector<RatVector> coroot_system(const IntMatrix& cartan) {
  const std::size_t r = cartan.rows();
  std::set<IntVector> seen;
  std::vector<IntVector> todo;
  for (std::size_t i = 0; i < r; ++i) {
    IntVector e(r);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    IntVector b = todo.back();
    todo.pop_back();
    for (std::size_t j = 0; j < r; ++j) {
      Integer pairing = 0;
      for (std::size_t i = 0; i < r; ++i) pairing += b[i] * cartan(i, j);
      IntVector c = b;
      c[j] -= pairing;
      if (seen.insert(c).second) todo.push_back(c);
    }
  }
  std::vector<RatVector> out;
  for (const auto& b : seen) out.push_back(to_rational(b));
  return out;
}

/// Simple group of the given Cartan type in simple-coroot coordinates. The
/// cocharacter lattice is Q (simply connected) or the coweight lattice (adjoint),
/// whose basis is the rows of the inverse Cartan matrix.
inline RootDatum simple_datum(char type, std::size_t r, Isogeny iso) {
  IntMatrix cartan = cartan_matrix(type, r);
  RootDatum rd;
  rd.name = std::string(1, type) + std::to_string(r) + (iso == Isogeny::SimplyConnected ? " sc" : " adj");
  rd.rank = r;
  rd.kind = DatumKind::Semisimple;
  rd.coroots = Lattice::standard(r);
  rd.coroot_generators = coroot_system(cartan);
  auto inv = inverse(RatMatrix(cartan));
  if (!inv) throw InternalError("singular Cartan matrix");
  std::vector<RatVector> coweights;
  for (std::size_t i = 0; i < r; ++i) {
    RatVector w(r);
    for (std::size_t j = 0; j < r; ++j) w[j] = (*inv)(i, j);
    coweights.push_back(w);
  }
  rd.cochar = iso == Isogeny::SimplyConnected ? Lattice::standard(r) : Lattice::from_generators(r, coweights);
  for (std::size_t i = 0; i < r; ++i) {
    if (rd.cochar.contains(coweights[i])) rd.named_vectors.push_back({"w" + std::to_string(i + 1), coweights[i]});
  }
  for (std::size_t i = 0; i < r; ++i) rd.named_vectors.push_back({"a" + std::to_string(i + 1), detail::unit(r, i)});
  // alpha_j in simple-coroot coordinates is column j of the Cartan matrix.
  for (std::size_t j = 0; j < r; ++j) {
    RatVector alpha(r);
    for (std::size_t i = 0; i < r; ++i) alpha[i] = cartan(i, j);
    rd.display_weights.push_back({"alpha" + std::to_string(j + 1), alpha});
  }
  return rd;
}

// --- Classical families -----------------------------------------------------

inline RootDatum gl_datum(std::size_t n) {
  if (n < 1) throw ValidationError("GL needs n >= 1");
  RootDatum rd;
  rd.name = "GL(" + std::to_string(n) + ")";
  rd.rank = n;
  rd.cochar = Lattice::standard(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      RatVector c(n, Rational(0));
      c[i] = 1;
      c[j] = -1;
      rd.coroot_generators.push_back(c);
    }
  rd.coroots = Lattice::from_generators(n, rd.coroot_generators);
  for (std::size_t i = 0; i < n; ++i) {
    rd.display_weights.push_back({"eps" + std::to_string(i + 1), detail::unit(n, i)});
    rd.named_vectors.push_back({"e" + std::to_string(i + 1), detail::unit(n, i)});
  }
  return rd;
}

namespace detail {

// Coroots +-e_i +- e_j, plus +-2e_i for odd n, on the l-dimensional torus of SO_n.
inline std::vector<RatVector> orthogonal_coroots(std::size_t l, bool odd) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          RatVector c(l, Rational(0));
          c[i] = si;
          c[j] = sj;
          out.push_back(c);
        }
    if (odd) {
      out.push_back(unit(l, i, 2));
      out.push_back(unit(l, i, -2));
    }
  }
  return out;
}

// Diagonal of diag(t_1..t_p, 1..1, t_p^-1..t_1^-1) as characters of the torus.
inline std::vector<NamedVector> orthogonal_display(std::size_t n, std::size_t l, std::size_t p) {
  std::vector<NamedVector> out;
  for (std::size_t i = 0; i < p; ++i) out.push_back({"eps" + std::to_string(i + 1), unit(l, i)});
  for (std::size_t i = 0; i < n - 2 * p; ++i) out.push_back({"1", RatVector(l, Rational(0))});
  for (std::size_t i = p; i-- > 0;) out.push_back({"-eps" + std::to_string(i + 1), unit(l, i, -1)});
  return out;
}

}  // namespace detail

/// SO(p,q) on its maximal torus of rank floor((p+q)/2). p and q are swapped if p > q.
/// SO(1,1) and SO(0,2) are one-dimensional tori.
inline RootDatum so_datum(std::size_t p, std::size_t q) {
  if (p > q) std::swap(p, q);
  const std::size_t n = p + q;
  if (n < 2) throw ValidationError("SO(p,q) needs p+q >= 2");
  const std::size_t l = n / 2;
  RootDatum rd;
  rd.name = "SO(" + std::to_string(p) + "," + std::to_string(q) + ")";
  rd.rank = l;
  rd.kind = n == 2 ? DatumKind::Torus : DatumKind::Semisimple;
  rd.cochar = Lattice::standard(l);
  rd.coroot_generators = detail::orthogonal_coroots(l, n % 2 == 1);
  rd.coroots = Lattice::from_generators(l, rd.coroot_generators);
  rd.display_weights = detail::orthogonal_display(n, l, p);
  for (std::size_t i = 0; i < l; ++i) rd.named_vectors.push_back({"e" + std::to_string(i + 1), detail::unit(l, i)});
  return rd;
}

/// PSO(p,q) = SO(p,q)/{+-1}, p+q even: the cocharacter lattice gains (1/2)(e_1+...+e_l).
inline RootDatum pso_datum(std::size_t p, std::size_t q) {
  if (p > q) std::swap(p, q);
  const std::size_t n = p + q;
  if (n % 2 != 0) throw ValidationError("PSO(p,q) needs p+q even");
  if (n < 2) throw ValidationError("PSO(p,q) needs p+q >= 2");
  const std::size_t l = n / 2;
  RootDatum rd = so_datum(p, q);
  rd.name = "PSO(" + std::to_string(p) + "," + std::to_string(q) + ")";
  RatVector half(l, Rational(1, 2));
  rd.cochar = lattice_sum(Lattice::standard(l), Lattice::from_generators(l, std::vector<RatVector>{half}));
  rd.named_vectors.push_back({"w" + std::to_string(l), half});
  rd.note = "lift, defined up to simultaneous sign";
  return rd;
}

inline RootDatum torus_datum(std::size_t n, std::string name = "") {
  RootDatum rd;
  rd.name = name.empty() ? "T" + std::to_string(n) : std::move(name);
  rd.rank = n;
  rd.kind = DatumKind::Torus;
  rd.cochar = Lattice::standard(n);
  rd.coroots = Lattice::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    rd.display_weights.push_back({"eps" + std::to_string(i + 1), detail::unit(n, i)});
    rd.named_vectors.push_back({"e" + std::to_string(i + 1), detail::unit(n, i)});
  }
  return rd;
}

// --- Adjoint E7 in the SL8 model --------------------------------------------

/// Converts an 8-coordinate vector (k_1..k_8, modulo (1,...,1)) to the internal
/// coordinates e_1..e_7 obtained by eliminating e_8 = -(e_1+...+e_7).
inline RatVector e7_from_eight(const RatVector& k) {
  if (k.size() != 8) throw DimensionMismatch("e7_from_eight");
  RatVector c(7);
  for (std::size_t i = 0; i < 7; ++i) c[i] = k[i] - k[7];
  return c;
}

/// Inverse of e7_from_eight onto the trace-zero representative.
inline RatVector e7_to_eight(const RatVector& c) {
  if (c.size() != 7) throw DimensionMismatch("e7_to_eight");
  Rational s = 0;
  for (const auto& x : c) s += x;
  RatVector k(8);
  for (std::size_t i = 0; i < 7; ++i) k[i] = c[i] - s / 8;
  k[7] = -s / 8;
  return k;
}

inline RatVector e7_fundamental_coweight(std::size_t i) {
  RatVector k(8, Rational(0));
  if (i == 7) {
    k[7] = 2;
  } else {
    for (std::size_t j = 0; j < i; ++j) k[j] = 1;
    k[7] = static_cast<long>(std::min(i, 8 - i));
  }
  return e7_from_eight(k);
}

inline RatVector e7_simple_coroot(std::size_t i) {
  RatVector k(8, Rational(0));
  if (i == 7) {
    k[4] = k[5] = k[6] = k[7] = 1;
  } else {
    k[i - 1] = 1;
    k[i] = -1;
  }
  return e7_from_eight(k);
}

/// Weyl-invariant form on the E7 internal coordinates: the standard dot
/// product of the trace-zero 8-coordinate representatives.
inline RatMatrix e7_gram_matrix() {
  std::vector<RatVector> rows(7, RatVector(7));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      rows[i][j] = dot(e7_to_eight(detail::unit(7, i)), e7_to_eight(detail::unit(7, j)));
  return RatMatrix::from_rows(7, rows);
}

/// Adjoint E7 with coroots e_i - e_j and e_i+e_j+e_k+e_l (distinct indices).
inline RootDatum e7_adjoint_datum() {
  RootDatum rd;
  rd.name = "E7 adj";
  rd.rank = 7;
  rd.kind = DatumKind::Semisimple;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      if (i == j) continue;
      RatVector k(8, Rational(0));
      k[i] = 1;
      k[j] = -1;
      rd.coroot_generators.push_back(e7_from_eight(k));
    }
  for (std::size_t mask = 0; mask < 256; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) != 4) continue;
    RatVector k(8, Rational(0));
    for (std::size_t i = 0; i < 8; ++i) {
      if (mask & (1u << i)) k[i] = 1;
    }
    rd.coroot_generators.push_back(e7_from_eight(k));
  }
  std::vector<RatVector> simple;
  std::vector<RatVector> coweights;
  for (std::size_t i = 1; i <= 7; ++i) {
    simple.push_back(e7_simple_coroot(i));
    coweights.push_back(e7_fundamental_coweight(i));
  }
  rd.coroots = Lattice::from_generators(7, simple);
  rd.cochar = Lattice::from_generators(7, coweights);
  for (std::size_t i = 0; i < 7; ++i) rd.named_vectors.push_back({"w" + std::to_string(i + 1), coweights[i]});
  for (std::size_t i = 0; i < 7; ++i) rd.named_vectors.push_back({"a" + std::to_string(i + 1), simple[i]});
  // Simply laced with roots of square length 2, so alpha_j = Gram * a_j as a functional.
  const RatMatrix gram = e7_gram_matrix();
  for (std::size_t j = 0; j < 7; ++j) rd.display_weights.push_back({"alpha" + std::to_string(j + 1), gram.apply(simple[j])});
  return rd;
}


}  // namespace pi0
