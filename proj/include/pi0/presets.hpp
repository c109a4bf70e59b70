#pragma once

#include "pi0/real_form.hpp"

#include <optional>
#include <string>
#include <utility>

namespace pi0 {

enum class Family { GL, SO, PSO, TorusSplit, TorusCompact, TorusWeil, Simple, E7 };

enum class RealKind { Split, Compact };

struct PresetSpec {
  Family family = Family::GL;
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  char type = 'A';
  std::size_t rank = 0;
  Isogeny isogeny = Isogeny::SimplyConnected;
  RealKind real = RealKind::Split;
  E7Form form = E7Form::EV;
};

struct Preset {
  RootDatum datum;
  std::optional<Involution> involution;
};

inline Preset build_preset(const PresetSpec& spec) {
  Preset out;
  switch (spec.family) {
    case Family::GL:
      out.datum = gl_datum(spec.n);
      out.involution = split_involution(spec.n);
      break;
    case Family::SO:
    case Family::PSO: {
      std::size_t p = std::min(spec.p, spec.q);
      std::size_t q = std::max(spec.p, spec.q);
      out.datum = spec.family == Family::SO ? so_datum(p, q) : pso_datum(p, q);
      IntMatrix theta = IntMatrix::identity(out.datum.rank);
      for (std::size_t i = 0; i < p; ++i) theta(i, i) = -1;
      out.involution = Involution{RatMatrix(theta), "standard"};
      break;
    }
    case Family::TorusSplit:
      out.datum = torus_datum(spec.n, "split torus T" + std::to_string(spec.n));
      out.involution = split_involution(spec.n);
      break;
    case Family::TorusCompact:
      out.datum = torus_datum(spec.n, "compact torus T" + std::to_string(spec.n));
      out.involution = compact_involution(spec.n);
      break;
    case Family::TorusWeil:
      // Weil restriction of G_m from C to R: sigma swaps the factors.
      out.datum = torus_datum(2, "Weil torus");
      out.involution = Involution{RatMatrix(IntMatrix{{0, -1}, {-1, 0}}), "weil"};
      break;
    case Family::Simple:
      out.datum = simple_datum(spec.type, spec.rank, spec.isogeny);
      out.datum.name += spec.real == RealKind::Split ? " split" : " compact";
      out.involution =
          spec.real == RealKind::Split ? split_involution(spec.rank) : compact_involution(spec.rank);
      break;
    case Family::E7: {
      auto [rd, inv] = e7_preset(spec.form);
      out.datum = std::move(rd);
      out.involution = std::move(inv);
      break;
    }
  }
  if (auto problems = validate(out.datum); !problems.empty())
    throw InternalError("preset " + out.datum.name + " failed validation: " + problems.front());
  if (out.involution) out.involution = involution_from_matrix(out.datum, out.involution->theta, out.involution->name);
  return out;
}

}  // namespace pi0
