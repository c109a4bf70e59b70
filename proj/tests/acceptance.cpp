// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "fixtures.hpp"
#include "pi0/job.hpp"
#include "support.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace pi0;

namespace {

struct Check {
  std::vector<std::string> failures;
  std::size_t cases = 0;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) failures.push_back(what);
  }
};

std::vector<int> values(const Representative& r) {
  std::vector<int> out;
  for (const auto& e : r.evaluations) out.push_back(static_cast<int>(e.value));
  return out;
}

// Fourth-root exponents k of exp(pi i k / 2).
constexpr int kOne = 0, kI = 1, kMinusOne = 2, kMinusI = 3;

std::vector<int> sign_diag(std::size_t n) {
  std::vector<int> d(n, kOne);
  d.front() = kMinusOne;
  d.back() = kMinusOne;
  return d;
}

// Census through both brute-force paths: the library's coset oracle on the
// quotient and the independent reference computation.
bool census_agrees(const Elementary2Group& g, std::size_t reference_order) {
  auto bf = brute_force_quotient(g.sub(), g.sup(), kDefaultOracleBound);
  for (const auto& d : bf.invariant_factors)
    if (d != 2) return false;
  return bf.invariant_factors.size() == g.rank && support::to_size(g.order()) == reference_order;
}

void criterion_gl(Check& c) {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto f = fixtures::make(fixtures::gl(n));
    auto g = pi0::pi0(f.datum, f.involution);
    auto reps = representatives(f.datum, f.involution, g);
    std::vector<int> want(n, kOne);
    want[0] = kMinusOne;
    const std::string tag = "GL(" + std::to_string(n) + ")";
    c.expect(g.order() == 2, tag + " order");
    c.expect(g.labels == std::vector<std::string>{"e1"}, tag + " generator");
    c.expect(reps.size() == 1 && values(reps[0]) == want, tag + " representative");
  }
}

void criterion_so(Check& c) {
  for (std::size_t p = 1; p <= 4; ++p)
    for (std::size_t q = p; p + q <= 9; ++q) {
      auto f = fixtures::make(fixtures::so(p, q));
      auto g = pi0::pi0(f.datum, f.involution);
      auto reps = representatives(f.datum, f.involution, g);
      const std::string tag = f.name;
      c.expect(g.order() == 2, tag + " order");
      c.expect(reps.size() == 1 && values(reps[0]) == sign_diag(p + q), tag + " representative");
    }
  for (std::size_t n = 2; n <= 9; ++n) {
    auto f = fixtures::make(fixtures::so(0, n));
    c.expect(pi0::pi0(f.datum, f.involution).order() == 1, f.name + " order");
  }
}

void criterion_pso(Check& c) {
  for (std::size_t p = 1; p <= 5; ++p)
    for (std::size_t q = p; p + q <= 10; ++q) {
      if ((p + q) % 2 != 0) continue;
      auto f = fixtures::make(fixtures::pso(p, q));
      auto g = pi0::pi0(f.datum, f.involution);
      const std::string tag = f.name;
      const std::size_t l = (p + q) / 2;
      const std::string w = "w" + std::to_string(l);
      if (p < q && p % 2 == 1) {
        c.expect(g.order() == 1, tag + " connected");
      } else if (p < q) {
        c.expect(g.order() == 2, tag + " order 2");
      } else if (l % 2 == 1) {
        c.expect(g.order() == 2, tag + " order 2");
        c.expect(g.labels == std::vector<std::string>{w}, tag + " generator " + w);
      } else {
        c.expect(g.order() == 4, tag + " order 4");
        c.expect(g.labels == std::vector<std::string>{"e1", w}, tag + " generators e1, " + w);
        auto reps = representatives(f.datum, f.involution, g);
        std::vector<int> t2(2 * l, kI), t3(2 * l, kI);
        for (std::size_t i = l; i < 2 * l; ++i) t2[i] = t3[i] = kMinusI;
        t3.front() = kMinusI;
        t3.back() = kI;
        bool ok = reps.size() == 3 && values(reps[0]) == sign_diag(2 * l) && values(reps[1]) == t2 &&
                  values(reps[2]) == t3;
        for (const auto& r : reps) ok = ok && !r.note.empty();
        c.expect(ok, tag + " representatives t1, t2, t3");
      }
    }
}

void criterion_e7(Check& c) {
  auto run = [&](E7Form form, int order, bool w1) {
    auto f = fixtures::make(fixtures::e7(form));
    auto g = pi0::pi0(f.datum, f.involution);
    c.expect(g.order() == order, f.name + " order");
    if (w1) c.expect(g.labels == std::vector<std::string>{"w1"}, f.name + " generator w1");
  };
  run(E7Form::EV, 2, true);
  run(E7Form::EVI, 1, false);
  run(E7Form::EVII, 2, true);

  auto f = fixtures::make(fixtures::e7(E7Form::EVII));
  auto P = split_projection(f.involution);
  auto w = [](std::size_t i) { return e7_fundamental_coweight(i); };
  const Rational h(1, 2);
  c.expect(P.apply(w(3)) == w(2) + h * w(6), "(w3)_spl = w2 + w6/2");
  c.expect(P.apply(w(4)) == w(2) + w(6), "(w4)_spl = w2 + w6");
  c.expect(P.apply(w(5)) == h * w(2) + w(6), "(w5)_spl = w2/2 + w6");
  c.expect(P.apply(w(7)) == h * (w(2) + w(6)), "(w7)_spl = (w2 + w6)/2");
}

void criterion_simple(Check& c) {
  struct S {
    char t;
    std::size_t r;
  };
  for (auto s : {S{'G', 2}, S{'F', 4}, S{'E', 6}, S{'E', 7}, S{'E', 8}}) {
    auto f = fixtures::make(fixtures::simple(s.t, s.r, Isogeny::SimplyConnected, RealKind::Split));
    c.expect(pi0::pi0(f.datum, f.involution).order() == 1, f.name);
  }
  auto e6 = fixtures::make(fixtures::simple('E', 6, Isogeny::Adjoint, RealKind::Split));
  c.expect(pi0::pi0(e6.datum, e6.involution).order() == 1, e6.name);
  for (const auto& f : fixtures::all()) {
    if (!(f.involution.theta == RatMatrix::identity(f.datum.rank))) continue;
    c.expect(pi0::pi0(f.datum, f.involution).order() == 1, f.name + " (compact)");
  }
}

std::vector<std::vector<long>> to_long(const RatMatrix& m) {
  std::vector<std::vector<long>> out(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<long>(numerator(m(i, j)));
  return out;
}

void criterion_tori(Check& c) {
  auto check = [&](const fixtures::Fixture& f, std::size_t want) {
    auto g = pi0::pi0(f.datum, f.involution);
    auto ref = oracle::reference(support::to_oracle(f.datum, f.involution));
    c.expect(support::to_size(g.order()) == want, f.name + " order");
    c.expect(ref.pi0.order == want && oracle::torus_pi0_order(to_long(f.involution.theta)) == want,
             f.name + " reference");
    c.expect(census_agrees(g, want), f.name + " census");
  };
  for (std::size_t n = 1; n <= 6; ++n) {
    check(fixtures::make(fixtures::torus(Family::TorusSplit, n)), std::size_t{1} << n);
    check(fixtures::make(fixtures::torus(Family::TorusCompact, n)), 1);
  }
  check(fixtures::make(fixtures::torus(Family::TorusWeil, 2)), 1);
}

struct Input {
  std::string name;
  RootDatum datum;
  Involution involution;
};

void check_properties(Check& c, const Input& in, const Input* original, const Input& partner) {
  const auto& rd = in.datum;
  const auto& inv = in.involution;
  const std::string tag = in.name;
  try {
    auto g = pi0::pi0(rd, inv);  // throws unless the quotient is elementary abelian of exponent 2
    auto h = h1_pi1(rd, inv);
    c.expect(h.order() % g.order() == 0, tag + ": |pi0| divides |H1|");
    c.expect(kernel_embedding_check(rd, inv), tag + ": kernel embedding");
    if (original) {
      c.expect(g.order() == pi0::pi0(original->datum, original->involution).order() &&
                   h.order() == h1_pi1(original->datum, original->involution).order(),
               tag + ": basis-change invariance");
    }
    for (const auto* q : {&g.quotient, &h.quotient}) {
      if (*q->order() > kDefaultOracleBound) continue;
      auto bf = brute_force_quotient(q->sub, q->sup, kDefaultOracleBound);
      auto a = bf.invariant_factors, b = q->invariant_factors;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      c.expect(a == b, tag + ": Smith form vs brute force");
    }
    if (rd.rank + partner.datum.rank <= 10) {
      auto prod = product(rd, partner.datum);
      auto pinv = involution_from_matrix(prod, direct_sum(inv, partner.involution).theta);
      c.expect(pi0::pi0(prod, pinv).order() == g.order() * pi0::pi0(partner.datum, partner.involution).order(),
               tag + " x " + partner.name + ": multiplicativity");
    }
  } catch (const std::exception& e) {
    c.expect(false, tag + ": " + e.what());
  }
}

void criterion_random(Check& c, std::size_t& inputs) {
  oracle::Rng rng(20240607);
  auto fs = fixtures::all();
  auto pick = [&]() -> const fixtures::Fixture& {
    return fs[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(fs.size()) - 1))];
  };
  for (int round = 0; round < 2; ++round) {
    for (const auto& f : fs) {
      IntMatrix g = oracle::random_unimodular(rng, f.datum.rank);
      auto rd = change_basis(f.datum, g);
      Input moved{f.name + " (basis change " + std::to_string(round) + ")", rd,
                  involution_from_matrix(rd, change_basis(f.involution, g).theta)};
      Input original{f.name, f.datum, f.involution};
      const auto& other = pick();
      check_properties(c, moved, &original, Input{other.name, other.datum, other.involution});
      ++inputs;
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    auto t = oracle::random_torus_involution(rng, n);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = t[i][j];
    auto rd = torus_datum(n);
    Input in{"random torus " + std::to_string(trial), rd, involution_from_matrix(rd, m)};
    const auto& other = pick();
    check_properties(c, in, nullptr, Input{other.name, other.datum, other.involution});
    auto ref = oracle::reference(support::to_oracle(rd, in.involution));
    c.expect(ref.pi0.exponent_two && support::to_size(pi0::pi0(rd, in.involution).order()) == ref.pi0.order &&
                 ref.pi0.order == oracle::torus_pi0_order(t),
             in.name + ": reference census");
    ++inputs;
  }
}

void criterion_h1(Check& c) {
  auto check = [&](const fixtures::Fixture& f, std::size_t want) {
    auto h = h1_pi1(f.datum, f.involution);
    auto ref = oracle::reference(support::to_oracle(f.datum, f.involution));
    c.expect(support::to_size(h.order()) == want, f.name + " H1 order");
    c.expect(ref.h1.order == want && ref.h1.exponent_two, f.name + " H1 reference");
    c.expect(census_agrees(h, want), f.name + " H1 census");
  };
  check(fixtures::make(fixtures::torus(Family::TorusSplit, 1)), 2);
  check(fixtures::make(fixtures::torus(Family::TorusCompact, 1)), 1);
  check(fixtures::make(fixtures::e7(E7Form::EV)), 2);
}

bool report(int number, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const bool ok = c.failures.empty();
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << " (" << c.cases
            << " checks)\n";
  for (const auto& f : c.failures) std::cout << "        failed: " << f << "\n";
  return ok;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "GL(n), n = 1..8: order 2, generator e1, diag(-1,1,...,1)", criterion_gl);
  ok &= report(2, "SO(p,q), 1 <= p <= q, p+q <= 9: order 2, diag(-1,1,...,1,-1); SO(0,n) connected", criterion_so);
  ok &= report(3, "PSO(p,q), p+q even <= 10: orders 1/2/2/4 with generators and t1, t2, t3", criterion_pso);
  ok &= report(4, "adjoint E7: EV 2 (w1), EVI 1, EVII 2 (w1); exact split projections", criterion_e7);
  ok &= report(5, "simply connected split G2, F4, E6, E7, E8 and adjoint split E6 connected; compact forms connected",
               criterion_simple);
  ok &= report(6, "tori: split 2^n, compact 1, Weil 1, cross-checked by brute force", criterion_tori);
  std::size_t inputs = 0;
  ok &= report(7, "randomized properties", [&](Check& c) {
    criterion_random(c, inputs);
    c.expect(inputs >= 200, "at least 200 random inputs (got " + std::to_string(inputs) + ")");
  });
  std::cout << "        random inputs: " << inputs << "\n";
  ok &= report(8, "H1: split G_m 2, compact torus 1, adjoint split E7 2, confirmed by brute force", criterion_h1);
  return ok ? 0 : 1;
}
