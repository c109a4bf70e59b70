#pragma once

#include "pi0/pi0.hpp"

#include <string>
#include <vector>

namespace fixtures {

struct Fixture {
  std::string name;
  pi0::RootDatum datum;
  pi0::Involution involution;
};

inline Fixture make(const pi0::PresetSpec& spec) {
  auto p = pi0::build_preset(spec);
  return {p.datum.name, p.datum, *p.involution};
}

inline pi0::PresetSpec gl(std::size_t n) { return {pi0::Family::GL, n}; }
inline pi0::PresetSpec so(std::size_t p, std::size_t q) { return {pi0::Family::SO, 0, p, q}; }
inline pi0::PresetSpec pso(std::size_t p, std::size_t q) { return {pi0::Family::PSO, 0, p, q}; }
inline pi0::PresetSpec torus(pi0::Family f, std::size_t n) { return {f, n}; }
inline pi0::PresetSpec simple(char type, std::size_t rank, pi0::Isogeny iso, pi0::RealKind real) {
  pi0::PresetSpec s{pi0::Family::Simple};
  s.type = type;
  s.rank = rank;
  s.isogeny = iso;
  s.real = real;
  return s;
}
inline pi0::PresetSpec e7(pi0::E7Form form) {
  pi0::PresetSpec s{pi0::Family::E7};
  s.form = form;
  return s;
}

// Every named group the acceptance table mentions, small enough for the census.
inline std::vector<Fixture> all() {
  using pi0::Family;
  using pi0::Isogeny;
  using pi0::RealKind;
  std::vector<Fixture> out;
  for (std::size_t n = 1; n <= 8; ++n) out.push_back(make(gl(n)));
  for (std::size_t p = 0; p <= 4; ++p)
    for (std::size_t q = p; p + q <= 9; ++q)
      if (p + q >= 2) out.push_back(make(so(p, q)));
  for (std::size_t p = 0; p <= 5; ++p)
    for (std::size_t q = p; p + q <= 10; ++q)
      if ((p + q) % 2 == 0 && p + q >= 2) out.push_back(make(pso(p, q)));
  for (auto f : {pi0::E7Form::EV, pi0::E7Form::EVI, pi0::E7Form::EVII}) out.push_back(make(e7(f)));
  struct S {
    char t;
    std::size_t r;
  };
  for (auto s : {S{'G', 2}, S{'F', 4}, S{'E', 6}, S{'E', 7}, S{'E', 8}, S{'A', 3}, S{'B', 3}, S{'C', 3}, S{'D', 4}})
    for (auto iso : {Isogeny::SimplyConnected, Isogeny::Adjoint})
      for (auto real : {RealKind::Split, RealKind::Compact}) out.push_back(make(simple(s.t, s.r, iso, real)));
  for (std::size_t n = 1; n <= 5; ++n) {
    out.push_back(make(torus(Family::TorusSplit, n)));
    out.push_back(make(torus(Family::TorusCompact, n)));
  }
  out.push_back(make(torus(Family::TorusWeil, 2)));
  return out;
}

}  // namespace fixtures
