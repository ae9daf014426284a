// Command-line front end: run, check-ops, equivalence-test.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>

#include "sbpmhd/driver.hpp"
#include "sbpmhd/error.hpp"
#include "sbpmhd/verification.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace sbpmhd;
  CLI::App app{"Hybrid SBP / subcell FV solver for 2D GLM-MHD"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version_string()));

  // run: every flag is kept as text and applied through the same key table
  // as the config file, after the file, so flags override it.
  auto* run = app.add_subcommand("run", "Run a benchmark problem");
  std::string config_path;
  run->add_option("--config", config_path, "key = value file supplying defaults");
  std::map<std::string, std::string> flag_values;
  std::vector<std::string> slice_flags;
  for (const std::string& key : sbpmhd::config_keys()) {
    if (key == "slice") continue;
    run->add_option("--" + key, flag_values[key], key);
  }
  run->add_option("--slice", slice_flags, "slice line, e.g. y=0.4277 (repeatable)");
  bool quiet = false;
  run->add_flag("--quiet", quiet, "no progress output");

  auto* check = app.add_subcommand("check-ops", "Validate an SBP operator");
  std::string kind;
  int n = 0;
  check->add_option("--kind", kind, "lgl or fdsbp")->required()->check(CLI::IsMember({"lgl", "fdsbp"}));
  check->add_option("--n", n, "polynomial degree (lgl) or node count (fdsbp)")->required();

  auto* equiv = app.add_subcommand("equivalence-test",
                                   "Compare direct and flux-differencing residuals");
  std::string scheme_text = "lgl:3";
  std::uint64_t seed = 0;
  int trials = 200;
  equiv->add_option("--scheme", scheme_text, "lgl:N or fdsbp:n");
  equiv->add_option("--seed", seed, "random seed");
  equiv->add_option("--trials", trials, "number of random fields")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) {
      ConfigEntries entries;
      if (!config_path.empty()) entries = read_config_file(config_path);
      for (const std::string& key : config_keys()) {
        if (key == "slice") continue;
        if (run->count("--" + key) > 0) entries.emplace_back(key, flag_values[key]);
      }
      for (const std::string& s : slice_flags) entries.emplace_back("slice", s);
      const RunConfig cfg = make_run_config(entries);
      const RunResult r = run_simulation(cfg, quiet ? nullptr : &std::cerr);
      if (!r.ok) {
        std::cerr << "numerical failure: " << r.failure << "\n";
        return kExitNumerical;
      }
      std::printf("completed %ld steps to t=%.6g in %.2f s; min rho %.6g, min p %.6g\n", r.steps,
                  r.t_final, r.wall_seconds, r.min_rho, r.min_p);
      return 0;
    }
    if (*check) {
      const SbpOperator1D op =
          kind == "lgl" ? build_lgl_operator(n) : build_fd_sbp_operator(n);
      const ValidationReport rep = verify_sbp(op);
      std::printf("%s operator, %d nodes\n", kind.c_str(), op.n_nodes());
      std::printf("%-4s %24s %24s\n", "j", "node", "weight");
      for (int j = 0; j < op.n_nodes(); ++j)
        std::printf("%-4d %24.17g %24.17g\n", j, op.nodes[j], op.weights[j]);
      std::cout << rep.to_string() << "\n";
      return rep.passes() ? 0 : 1;
    }
    if (*equiv) {
      const SchemeSpec spec = SchemeSpec::parse(scheme_text);
      const EquivalenceReport rep = equivalence_suite(spec, seed, trials);
      std::printf("scheme %s, %d fields, seed %llu\n", spec.to_string().c_str(), rep.trials,
                  static_cast<unsigned long long>(seed));
      std::printf("max |direct - fluxdiff|             = %.3e\n", rep.max_abs_deviation);
      std::printf("max |direct - fluxdiff| / (1+|rhs|) = %.3e\n", rep.max_scaled_deviation);
      return rep.max_scaled_deviation <= 1e-12 ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
