// pi0: component groups of real reductive groups.
//
//   pi0 compute <job.json> [--pi0] [--h1] [--reps] [--oracle] [--format text|json]
//   pi0 preset <name> [--n N | --p P --q Q | --form EV|EVI|EVII |
//                      --type T --rank R --isogeny sc|adj --real split|compact] [outputs...]
//
// Exit status: 0 success, 1 validation error, 2 internal assertion or oracle disagreement.

#include "pi0/job.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

enum Exit { kOk = 0, kValidation = 1, kInternal = 2 };

struct OutputFlags {
  bool pi0 = false;
  bool h1 = false;
  bool reps = false;
  bool oracle = false;
  std::string format = "text";
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  cmd->add_flag("--pi0", flags.pi0, "Report the component group (always on)");
  cmd->add_flag("--h1", flags.h1, "Also report H1(R, iX/iQ) and check the embedding");
  cmd->add_flag("--reps", flags.reps, "List a torus element for every nonidentity component");
  cmd->add_flag("--oracle", flags.oracle, "Cross-check against brute-force coset enumeration");
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "json-like"}));
}

void merge(pi0::Outputs& out, const OutputFlags& flags) {
  out.h1 = out.h1 || flags.h1;
  out.reps = out.reps || flags.reps;
  out.oracle = out.oracle || flags.oracle;
}

int emit(const pi0::JobSpec& job, const std::string& format) {
  pi0::Report report = pi0::run(job);
  std::cout << (format == "text" ? pi0::render_text(report) : pi0::render_json(report));
  if (report.oracle && *report.oracle == "disagree") {
    std::cerr << "error: oracle disagrees with the Smith-form computation\n";
    return kInternal;
  }
  return kOk;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pi0::ValidationError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Component groups of real reductive groups from torus data"};
  app.require_subcommand(1);

  OutputFlags compute_flags;
  std::string spec_file;
  auto* compute = app.add_subcommand("compute", "Run a JSON job file");
  compute->add_option("spec-file", spec_file, "Job document")->required();
  add_output_flags(compute, compute_flags);

  OutputFlags preset_flags;
  std::string preset_name;
  pi0::PresetParams params;
  long n = 0, p = 0, q = 0, rank = 0;
  std::string form, type, isogeny, real;
  auto* preset = app.add_subcommand("preset", "Run a built-in group");
  preset->add_option("name", preset_name, "GL, SO, PSO, E7, SIMPLE, TORUS_SPLIT, TORUS_COMPACT, TORUS_WEIL")
      ->required();
  auto* n_opt = preset->add_option("--n", n, "Rank for GL and tori");
  auto* p_opt = preset->add_option("--p", p, "SO/PSO signature p");
  auto* q_opt = preset->add_option("--q", q, "SO/PSO signature q");
  auto* form_opt = preset->add_option("--form", form, "E7 real form")->check(CLI::IsMember({"EV", "EVI", "EVII"}));
  auto* type_opt = preset->add_option("--type", type, "Cartan type A..G");
  auto* rank_opt = preset->add_option("--rank", rank, "Cartan rank");
  auto* iso_opt = preset->add_option("--isogeny", isogeny, "sc or adj")->check(CLI::IsMember({"sc", "adj"}));
  auto* real_opt =
      preset->add_option("--real", real, "split or compact")->check(CLI::IsMember({"split", "compact"}));
  add_output_flags(preset, preset_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*compute) {
      pi0::JobSpec job = pi0::parse_jobspec(read_file(spec_file));
      merge(job.outputs, compute_flags);
      return emit(job, compute_flags.format);
    }
    if (*n_opt) params.n = n;
    if (*p_opt) params.p = p;
    if (*q_opt) params.q = q;
    if (*rank_opt) params.rank = rank;
    if (*form_opt) params.form = form;
    if (*type_opt) params.type = type;
    if (*iso_opt) params.isogeny = isogeny;
    if (*real_opt) params.real = real;
    pi0::JobSpec job;
    job.source = pi0::make_preset_spec(preset_name, params);
    job.oracle_bound = pi0::oracle_bound_from_env();
    merge(job.outputs, preset_flags);
    return emit(job, preset_flags.format);
  } catch (const pi0::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const pi0::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
