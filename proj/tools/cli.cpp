#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "fpd/error.hpp"
#include "fpd/family.hpp"
#include "fpd/fpd.hpp"
#include "fpd/quiver.hpp"
#include "fpd/report.hpp"
#include "fpd/verify.hpp"

namespace fpd::cli {

namespace {

struct PipelineFlags {
  std::string mode = "thin";
  std::size_t max_dim = 0;
  unsigned field = 2;
  double tol = 1e-10;
  bool json = false;
  std::string output;
  CLI::Option* max_dim_opt = nullptr;
  CLI::Option* field_opt = nullptr;
};

void add_pipeline_flags(CLI::App& cmd, PipelineFlags& f) {
  cmd.add_option("--mode", f.mode, "Brick enumeration: thin or oracle")
      ->check(CLI::IsMember({"thin", "oracle"}));
  f.max_dim_opt = cmd.add_option("--max-dim", f.max_dim,
                                 "Oracle bound on total dimension (default: vertices + 2)");
  f.field_opt = cmd.add_option("--field", f.field, "Oracle field order, 2 or 3 (default 2)");
  cmd.add_option("--tol", f.tol, "Spectral radius tolerance")->capture_default_str();
  cmd.add_flag("--json", f.json, "Emit the JSON report");
  cmd.add_option("-o,--output", f.output, "Write the report to a file");
}

EnumerationOptions options_from(const PipelineFlags& f) {
  EnumerationOptions o;
  if (f.mode == "oracle") {
    o.mode = EnumerationMode::Oracle;
    o.max_total_dim = f.max_dim;
    o.field_order = f.field;
    if (f.max_dim_opt->count() && f.max_dim < 1)
      throw ValidationError("--max-dim must be at least 1");
  } else if (f.max_dim_opt->count() || f.field_opt->count()) {
    throw ValidationError("--max-dim and --field require --mode oracle");
  }
  if (!(f.tol > 0)) throw ValidationError("--tol must be positive");
  return o;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw ValidationError("cannot open " + path + " for writing");
  file << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius-Perron dimension of radical-square-zero quiver algebras", "fpd"};
  app.require_subcommand(1);

  PipelineFlags compute_flags;
  std::string input;
  auto* compute = app.add_subcommand("compute", "Load a quiver file and compute its fpd");
  compute->add_option("file", input, "Quiver file")->required();
  add_pipeline_flags(*compute, compute_flags);

  PipelineFlags family_flags;
  std::string family_type;
  std::size_t family_n = 0;
  std::vector<std::size_t> family_loops;
  auto* family = app.add_subcommand("family", "Generate a named family and compute its fpd");
  family->add_option("--type", family_type, "A, D, E, Qnm or A3rev")->required();
  auto* n_opt = family->add_option("--n", family_n, "Number of vertices (A, D, E)");
  family->add_option("--loops", family_loops, "Loop counts per vertex, comma-separated")
      ->required()
      ->delimiter(',');
  add_pipeline_flags(*family, family_flags);

  bool quick = false, full = false, oracle = false, verify_json = false;
  auto* verify = app.add_subcommand("verify", "Run the verification battery");
  auto* quick_opt = verify->add_flag("--quick", quick, "Reduced grids, no time limits");
  auto* full_opt = verify->add_flag("--full", full, "Every criterion, full grids");
  auto* oracle_opt = verify->add_flag("--oracle", oracle, "Add the thin/oracle comparison");
  quick_opt->excludes(full_opt)->excludes(oracle_opt);
  full_opt->excludes(oracle_opt);
  verify->add_flag("--json", verify_json, "Emit results as JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (*compute) {
      const auto spec = parse_quiver(read_file(input));
      const auto report = compute_fpd(spec, options_from(compute_flags), compute_flags.tol);
      emit(compute_flags.json ? render_json(report) : render_text(report), compute_flags.output,
           out);
      return 0;
    }
    if (*family) {
      FamilySpec f{parse_family_kind(family_type), family_n, family_loops};
      if (!n_opt->count()) f.n = family_loops.size();
      const auto report = compute_family_fpd(f, options_from(family_flags), family_flags.tol);
      emit(family_flags.json ? render_json(report) : render_text(report), family_flags.output,
           out);
      return 0;
    }
    const VerifyMode mode = quick ? VerifyMode::Quick
                            : full ? VerifyMode::Full
                            : oracle ? VerifyMode::Oracle
                                     : VerifyMode::Standard;
    std::function<void(const CriterionResult&)> progress;
    if (!verify_json)
      progress = [&](const CriterionResult& r) { out << render_results({r}) << std::flush; };
    const auto results = run_verification(mode, progress);
    if (verify_json) out << to_json(results).dump(2) << '\n';
    const bool ok = std::all_of(results.begin(), results.end(),
                                [](const CriterionResult& r) { return r.passed; });
    return ok ? 0 : 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace fpd::cli
