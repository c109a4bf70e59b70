#pragma once

// Job specifications and reports for the pi0 command-line tool.
//
// A job is one JSON document naming either a preset or inline torus data:
//
//   {"preset": "GL", "n": 8}
//   {"preset": "PSO", "p": 4, "q": 4}
//   {"preset": "E7", "form": "EVII"}
//   {"preset": "SIMPLE", "type": "E", "rank": 6, "isogeny": "adj", "real": "split"}
//   {"rank": 2, "coroots": [], "theta": [[0, -1], [-1, 0]]}
//
// Inline data may also carry "cochar" (rows; default Z^rank), "split" and
// "compact" spans instead of "theta", "weights" and "named" lists of
// {"label", "vector"}, "name" and "note". Entries are integers or "p/q" strings.
// Optional "outputs" (subset of pi0, h1, reps, oracle) and "oracle_bound".

#include "pi0/components.hpp"
#include "pi0/presets.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pi0 {

struct Outputs {
  bool pi0 = true;
  bool h1 = false;
  bool reps = false;
  bool oracle = false;
};

struct InlineSource {
  RootDatum datum;
  std::optional<RatMatrix> theta;
  std::vector<RatVector> split_span;
  std::vector<RatVector> compact_span;
};

struct JobSpec {
  std::variant<PresetSpec, InlineSource> source;
  Outputs outputs;
  std::size_t oracle_bound = 4096;
};

inline constexpr std::size_t kDefaultOracleBound = 4096;
inline constexpr const char* kOracleBoundEnv = "PI0_ORACLE_BOUND";

/// Oracle bound from the environment, falling back to the default.
inline std::size_t oracle_bound_from_env() {
  const char* env = std::getenv(kOracleBoundEnv);
  if (!env || !*env) return kDefaultOracleBound;
  try {
    return static_cast<std::size_t>(std::stoull(env));
  } catch (const std::exception&) {
    throw ValidationError(std::string(kOracleBoundEnv) + " is not a number: '" + env + "'");
  }
}

/// Parameters of a preset as given on the command line or in a job file.
struct PresetParams {
  std::optional<long> n, p, q, rank;
  std::optional<std::string> form, type, isogeny, real;
};

namespace detail {

inline std::string normalize_name(std::string s) {
  for (auto& c : s) c = c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

inline std::size_t require_count(const std::optional<long>& v, const char* field, const std::string& family,
                                 long minimum = 0) {
  if (!v) throw ValidationError("preset " + family + " needs '" + field + "'");
  if (*v < minimum)
    throw ValidationError("field '" + std::string(field) + "': must be >= " + std::to_string(minimum));
  return static_cast<std::size_t>(*v);
}

}  // namespace detail

inline PresetSpec make_preset_spec(const std::string& name, const PresetParams& params) {
  const std::string family = detail::normalize_name(name);
  PresetSpec spec;
  if (family == "GL") {
    spec.family = Family::GL;
    spec.n = detail::require_count(params.n, "n", family, 1);
  } else if (family == "SO" || family == "PSO") {
    spec.family = family == "SO" ? Family::SO : Family::PSO;
    spec.p = detail::require_count(params.p, "p", family);
    spec.q = detail::require_count(params.q, "q", family);
    const std::size_t total = spec.p + spec.q;
    if (spec.family == Family::SO && total < 2) throw ValidationError("SO(p,q) needs p+q >= 2");
    if (spec.family == Family::PSO && total % 2 != 0) throw ValidationError("PSO(p,q) needs p+q even");
    if (spec.family == Family::PSO && total < 2) throw ValidationError("PSO(p,q) needs p+q >= 2");
  } else if (family == "TORUS_SPLIT" || family == "TORUS_COMPACT") {
    spec.family = family == "TORUS_SPLIT" ? Family::TorusSplit : Family::TorusCompact;
    spec.n = detail::require_count(params.n, "n", family);
  } else if (family == "TORUS_WEIL") {
    spec.family = Family::TorusWeil;
  } else if (family == "E7") {
    spec.family = Family::E7;
    if (!params.form) throw ValidationError("preset E7 needs 'form'");
    const std::string f = detail::normalize_name(*params.form);
    if (f == "EV") spec.form = E7Form::EV;
    else if (f == "EVI") spec.form = E7Form::EVI;
    else if (f == "EVII") spec.form = E7Form::EVII;
    else throw ValidationError("field 'form': unknown E7 form '" + *params.form + "'");
  } else if (family == "SIMPLE") {
    spec.family = Family::Simple;
    if (!params.type || params.type->size() != 1) throw ValidationError("preset SIMPLE needs 'type' (A..G)");
    spec.type = static_cast<char>(std::toupper(static_cast<unsigned char>((*params.type)[0])));
    spec.rank = detail::require_count(params.rank, "rank", family, 1);
    cartan_matrix(spec.type, spec.rank);  // validates type and rank
    const std::string iso = params.isogeny.value_or("sc");
    if (iso == "sc") spec.isogeny = Isogeny::SimplyConnected;
    else if (iso == "adj") spec.isogeny = Isogeny::Adjoint;
    else throw ValidationError("field 'isogeny': expected sc or adj, got '" + iso + "'");
    const std::string real = params.real.value_or("split");
    if (real == "split") spec.real = RealKind::Split;
    else if (real == "compact") spec.real = RealKind::Compact;
    else throw ValidationError("field 'real': expected split or compact, got '" + real + "'");
  } else {
    throw ValidationError("unknown preset '" + name + "'");
  }
  return spec;
}

namespace detail {

using nlohmann::json;

inline Rational parse_entry(const json& e, const std::string& where) {
  if (e.is_number_integer()) return Rational(Integer(e.get<long long>()));
  if (e.is_string()) {
    try {
      return parse_rational(e.get<std::string>());
    } catch (const ValidationError& err) {
      throw ValidationError(where + ": " + err.what());
    }
  }
  throw ValidationError(where + ": expected an integer or a \"p/q\" string");
}

inline RatVector parse_vector(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array()) throw ValidationError(where + ": expected an array");
  if (v.size() != n)
    throw ValidationError(where + ": has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n));
  RatVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse_entry(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<RatVector> parse_rows(const json& doc, const char* field, std::size_t n) {
  const json& rows = doc.at(field);
  if (!rows.is_array()) throw ValidationError(std::string("field '") + field + "': expected an array of rows");
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    out.push_back(parse_vector(rows[i], n, std::string("field '") + field + "' row " + std::to_string(i)));
  return out;
}

inline std::vector<NamedVector> parse_named(const json& doc, const char* field, std::size_t n) {
  std::vector<NamedVector> out;
  if (!doc.contains(field)) return out;
  const json& list = doc.at(field);
  if (!list.is_array()) throw ValidationError(std::string("field '") + field + "': expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = std::string("field '") + field + "' item " + std::to_string(i);
    const json& item = list[i];
    if (!item.is_object() || !item.contains("label") || !item.contains("vector") || !item["label"].is_string())
      throw ValidationError(where + ": expected {\"label\": string, \"vector\": [...]}");
    out.push_back({item["label"].get<std::string>(), parse_vector(item["vector"], n, where)});
  }
  return out;
}

template <class T>
std::optional<T> optional_field(const json& doc, const char* field) {
  if (!doc.contains(field)) return std::nullopt;
  try {
    return doc.at(field).get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("field '") + field + "': wrong type");
  }
}

inline InlineSource parse_inline(const json& doc) {
  auto rank = optional_field<long>(doc, "rank");
  if (!rank || *rank < 0) throw ValidationError("field 'rank': expected a non-negative integer");
  const auto n = static_cast<std::size_t>(*rank);
  InlineSource src;
  RootDatum& rd = src.datum;
  rd.rank = n;
  rd.name = optional_field<std::string>(doc, "name").value_or("inline datum");
  rd.note = optional_field<std::string>(doc, "note").value_or("");
  rd.cochar = doc.contains("cochar") ? Lattice::from_generators(n, parse_rows(doc, "cochar", n)) : Lattice::standard(n);
  if (!doc.contains("coroots")) throw ValidationError("field 'coroots': missing (use [] for a torus)");
  rd.coroot_generators = parse_rows(doc, "coroots", n);
  rd.coroots = Lattice::from_generators(n, rd.coroot_generators);
  if (rd.coroot_generators.empty()) rd.kind = DatumKind::Torus;
  rd.display_weights = parse_named(doc, "weights", n);
  rd.named_vectors = parse_named(doc, "named", n);
  if (!doc.contains("weights") && !doc.contains("named")) {
    for (std::size_t i = 0; i < n; ++i) {
      RatVector e(n, Rational(0));
      e[i] = 1;
      rd.display_weights.push_back({"eps" + std::to_string(i + 1), e});
      rd.named_vectors.push_back({"e" + std::to_string(i + 1), e});
    }
  }
  const bool has_theta = doc.contains("theta");
  const bool has_spans = doc.contains("split") || doc.contains("compact");
  if (has_theta == has_spans) throw ValidationError("give exactly one of 'theta' or 'split'/'compact'");
  if (has_theta) {
    src.theta = RatMatrix::from_rows(n, parse_rows(doc, "theta", n));
    if (n == 0) src.theta = RatMatrix(IntMatrix(0, 0));
  } else {
    if (doc.contains("split")) src.split_span = parse_rows(doc, "split", n);
    if (doc.contains("compact")) src.compact_span = parse_rows(doc, "compact", n);
  }
  return src;
}

inline Outputs parse_outputs(const json& doc) {
  Outputs o;
  if (!doc.contains("outputs")) return o;
  const json& list = doc.at("outputs");
  if (!list.is_array()) throw ValidationError("field 'outputs': expected an array of strings");
  for (const auto& item : list) {
    if (!item.is_string()) throw ValidationError("field 'outputs': expected an array of strings");
    const auto s = item.get<std::string>();
    if (s == "pi0") o.pi0 = true;
    else if (s == "h1") o.h1 = true;
    else if (s == "reps") o.reps = true;
    else if (s == "oracle") o.oracle = true;
    else throw ValidationError("field 'outputs': unknown output '" + s + "'");
  }
  return o;
}

}  // namespace detail

inline JobSpec parse_jobspec(const nlohmann::json& doc) {
  using detail::optional_field;
  if (!doc.is_object()) throw ValidationError("job document must be a JSON object");
  const bool has_preset = doc.contains("preset");
  const bool has_inline = doc.contains("rank") && !has_preset;
  if (has_preset && doc.contains("coroots")) throw ValidationError("give either 'preset' or inline data, not both");
  if (!has_preset && !has_inline) throw ValidationError("job needs 'preset' or inline 'rank'/'coroots' data");
  JobSpec job;
  if (has_preset) {
    PresetParams params;
    params.n = optional_field<long>(doc, "n");
    params.p = optional_field<long>(doc, "p");
    params.q = optional_field<long>(doc, "q");
    params.rank = optional_field<long>(doc, "rank");
    params.form = optional_field<std::string>(doc, "form");
    params.type = optional_field<std::string>(doc, "type");
    params.isogeny = optional_field<std::string>(doc, "isogeny");
    params.real = optional_field<std::string>(doc, "real");
    auto name = optional_field<std::string>(doc, "preset");
    job.source = make_preset_spec(*name, params);
  } else {
    job.source = detail::parse_inline(doc);
  }
  job.outputs = detail::parse_outputs(doc);
  auto bound = optional_field<long>(doc, "oracle_bound");
  if (bound && *bound < 1) throw ValidationError("field 'oracle_bound': must be positive");
  job.oracle_bound = bound ? static_cast<std::size_t>(*bound) : oracle_bound_from_env();
  return job;
}

inline JobSpec parse_jobspec(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed job document: ") + e.what());
  }
  return parse_jobspec(doc);
}

/// The datum and involution a job describes, fully validated.
inline Preset resolve(const JobSpec& job) {
  if (const auto* spec = std::get_if<PresetSpec>(&job.source)) return build_preset(*spec);
  const auto& src = std::get<InlineSource>(job.source);
  require_valid(src.datum);
  Preset out{src.datum, std::nullopt};
  out.involution = src.theta ? involution_from_matrix(src.datum, *src.theta, "inline")
                             : involution_from_eigenspaces(src.datum, src.split_span, src.compact_span, "inline");
  return out;
}

struct Report {
  std::string group;
  Integer order = 1;
  std::size_t rank = 0;
  std::vector<NamedVector> generators;
  std::optional<std::vector<Representative>> representatives;
  std::optional<Integer> h1_order;
  std::optional<std::string> oracle;

  friend bool operator==(const Report&, const Report&) = default;
};

namespace detail {

inline IntVector sorted_factors(IntVector v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Agreement of the SNF quotient with the coset census; nullopt if skipped.
inline std::optional<bool> oracle_agrees(const QuotientStructure& q, std::size_t bound) {
  auto order = q.order();
  if (!order || *order > bound) return std::nullopt;
  auto census = brute_force_quotient(q.sub, q.sup, bound);
  return sorted_factors(census.invariant_factors) == sorted_factors(q.invariant_factors);
}

}  // namespace detail

inline Report run(const JobSpec& job) {
  Preset resolved = resolve(job);
  const RootDatum& rd = resolved.datum;
  if (!resolved.involution) throw InternalError("preset without involution");
  const Involution& inv = *resolved.involution;

  Report report;
  report.group = rd.name;
  auto group = pi0(rd, inv);
  report.order = group.order();
  report.rank = group.rank;
  for (std::size_t i = 0; i < group.rank; ++i) report.generators.push_back({group.labels[i], group.generators[i]});
  if (job.outputs.reps) report.representatives = representatives(rd, inv, group);

  std::optional<Elementary2Group> h1;
  if (job.outputs.h1) {
    h1 = h1_pi1(rd, inv);
    report.h1_order = h1->order();
    if (!kernel_embedding_check(rd, inv)) throw InternalError("pi0 does not embed into H1(R, iX/iQ)");
  }
  if (job.outputs.oracle) {
    std::vector<std::optional<bool>> verdicts{detail::oracle_agrees(group.quotient, job.oracle_bound)};
    if (h1) verdicts.push_back(detail::oracle_agrees(h1->quotient, job.oracle_bound));
    bool checked = false;
    bool agree = true;
    for (const auto& v : verdicts) {
      if (!v) continue;
      checked = true;
      agree = agree && *v;
    }
    report.oracle = !checked ? "skipped" : agree ? "agree" : "disagree";
  }
  return report;
}

// --- Rendering --------------------------------------------------------------

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json entry_to_json(const Rational& x) {
  if (is_integral(x)) {
    const Integer v = numerator(x);
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
      return static_cast<long long>(v);
  }
  return to_string(x);
}

inline ordered_json vector_to_json(const RatVector& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : v) arr.push_back(entry_to_json(x));
  return arr;
}

inline ordered_json integer_to_json(const Integer& v) {
  if (v <= std::numeric_limits<long long>::max()) return static_cast<long long>(v);
  return to_string(v);
}

inline Integer integer_from_json(const ordered_json& j, const char* field) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ValidationError(std::string("report field '") + field + "': expected an integer");
}

inline RatVector vector_from_json(const ordered_json& j) {
  if (!j.is_array()) throw ValidationError("report vector: expected an array");
  RatVector v;
  for (const auto& e : j) {
    if (e.is_number_integer()) v.emplace_back(Integer(e.get<long long>()));
    else if (e.is_string()) v.push_back(parse_rational(e.get<std::string>()));
    else throw ValidationError("report vector: bad entry");
  }
  return v;
}

inline std::string element_text(const Representative& r) {
  if (r.evaluations.empty()) return "";
  // Root data without a matrix model list the simple-root values instead.
  if (r.evaluations.front().label.rfind("alpha", 0) == 0) {
    std::string s = "roots(";
    for (std::size_t i = 0; i < r.evaluations.size(); ++i) {
      if (i) s += ", ";
      s += to_string(r.evaluations[i].value);
    }
    return s + ")";
  }
  std::string s = r.note.empty() ? "diag(" : "±diag(";
  for (std::size_t i = 0; i < r.evaluations.size(); ++i) {
    if (i) s += ", ";
    s += to_string(r.evaluations[i].value);
  }
  return s + ")";
}

inline std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace detail

inline std::string render_json(const Report& r) {
  using detail::ordered_json;
  ordered_json doc;
  doc["group"] = r.group;
  doc["order"] = detail::integer_to_json(r.order);
  doc["rank"] = r.rank;
  ordered_json gens = ordered_json::array();
  ordered_json labels = ordered_json::array();
  for (const auto& g : r.generators) {
    gens.push_back(detail::vector_to_json(g.vector));
    labels.push_back(g.label);
  }
  doc["generators"] = gens;
  doc["generator_labels"] = labels;
  if (r.representatives) {
    ordered_json reps = ordered_json::array();
    for (const auto& rep : *r.representatives) {
      ordered_json item;
      item["nu"] = detail::vector_to_json(rep.nu);
      item["label"] = rep.label;
      ordered_json evals = ordered_json::array();
      for (const auto& e : rep.evaluations) evals.push_back(ordered_json::array({e.label, to_string(e.value)}));
      item["evaluations"] = evals;
      item["note"] = rep.note;
      reps.push_back(item);
    }
    doc["representatives"] = reps;
  }
  if (r.h1_order) doc["h1_order"] = detail::integer_to_json(*r.h1_order);
  if (r.oracle) doc["oracle"] = *r.oracle;
  return doc.dump(2) + "\n";
}

inline Report parse_report(const std::string& text) {
  using detail::ordered_json;
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
  try {
    Report r;
    r.group = doc.at("group").get<std::string>();
    r.order = detail::integer_from_json(doc.at("order"), "order");
    r.rank = doc.at("rank").get<std::size_t>();
    const auto& gens = doc.at("generators");
    const auto& labels = doc.at("generator_labels");
    if (gens.size() != labels.size()) throw ValidationError("report: generator label count mismatch");
    for (std::size_t i = 0; i < gens.size(); ++i)
      r.generators.push_back({labels[i].get<std::string>(), detail::vector_from_json(gens[i])});
    if (doc.contains("representatives")) {
      r.representatives.emplace();
      for (const auto& item : doc.at("representatives")) {
        Representative rep;
        rep.nu = detail::vector_from_json(item.at("nu"));
        rep.label = item.at("label").get<std::string>();
        for (const auto& e : item.at("evaluations"))
          rep.evaluations.push_back({e.at(0).get<std::string>(), parse_fourth_root(e.at(1).get<std::string>())});
        rep.note = item.at("note").get<std::string>();
        r.representatives->push_back(std::move(rep));
      }
    }
    if (doc.contains("h1_order")) r.h1_order = detail::integer_from_json(doc.at("h1_order"), "h1_order");
    if (doc.contains("oracle")) r.oracle = doc.at("oracle").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
}

inline std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "group: " << r.group << "\n";
  out << "pi0 order: " << r.order << (r.order == 1 ? " (connected)" : "") << "\n";
  out << "pi0 rank: " << r.rank << "\n";
  if (!r.generators.empty()) {
    std::size_t width = 5;
    for (const auto& g : r.generators) width = std::max(width, g.label.size() + 2);
    out << "generators:\n";
    for (const auto& g : r.generators)
      out << "  " << detail::pad_right(g.label.empty() ? "-" : g.label, width) << to_string(g.vector) << "\n";
  }
  if (r.representatives && !r.representatives->empty()) {
    std::size_t label_w = 7;
    std::size_t nu_w = 4;
    for (const auto& rep : *r.representatives) {
      label_w = std::max(label_w, rep.label.size() + 2);
      nu_w = std::max(nu_w, to_string(rep.nu).size() + 2);
    }
    out << "representatives:\n";
    out << "  " << detail::pad_right("label", label_w) << detail::pad_right("nu", nu_w) << "t = exp(pi i nu)\n";
    for (const auto& rep : *r.representatives) {
      out << "  " << detail::pad_right(rep.label.empty() ? "-" : rep.label, label_w)
          << detail::pad_right(to_string(rep.nu), nu_w) << detail::element_text(rep) << "\n";
    }
    if (!r.representatives->front().note.empty()) out << "note: " << r.representatives->front().note << "\n";
  }
  if (r.h1_order) out << "H1(R, iX/iQ) order: " << *r.h1_order << "\n";
  if (r.oracle) out << "oracle: " << *r.oracle << "\n";
  return out.str();
}

}  // namespace pi0
