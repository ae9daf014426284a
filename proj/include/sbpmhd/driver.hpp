#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sbpmhd/benchmarks.hpp"
#include "sbpmhd/blend_field.hpp"
#include "sbpmhd/limiting.hpp"
#include "sbpmhd/time_integration.hpp"
#include "sbpmhd/two_point_fluxes.hpp"

namespace sbpmhd {

/// Version recorded in manifests ("0.1.0-g<describe>" when built from git).
const char* version_string();

struct SliceRequest {
  int axis = 1;  ///< 1: line of constant y (a slice along x); 0: constant x
  double coord = 0.0;
};

/// Parses "y=0.4277" or "x=0.5".
SliceRequest parse_slice(std::string_view text);
std::string to_string(const SliceRequest& s);

struct RunConfig {
  std::string problem;
  SchemeSpec scheme;
  int dof = 128;
  VolumeFluxKind volume_flux = VolumeFluxKind::Central;
  LimiterKind limiter = LimiterKind::Loehner;
  BlendMode blend = BlendMode::SubcellWise;
  double loehner_eps = 0.2;
  bool idp_density = true;
  bool idp_entropy = true;
  bool idp_entropy_only_where_density_limited = false;
  std::optional<double> dt;
  std::optional<double> t_end;
  std::optional<double> c_h;
  std::string output_dir = "run_output";
  /// Snapshot cadence; 0 writes only the initial and final snapshots.
  double output_interval = 0.0;
  double diag_interval = 0.01;
  std::vector<SliceRequest> slices;
  /// false: keep everything in memory (tests and acceptance runs).
  bool write_files = true;
};

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

/// Keys accepted by apply_config_entry; they match the long CLI flags.
const std::vector<std::string>& config_keys();

/// Sets one field from its textual form. Throws ConfigError for unknown keys
/// or unparsable values. The key "slice" appends; a comma separates several.
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

/// key = value lines; '#' starts a comment, blank lines are skipped.
ConfigEntries parse_config_text(const std::string& text);
ConfigEntries read_config_file(const std::string& path);

/// Later entries override earlier ones.
RunConfig make_run_config(const ConfigEntries& entries);

/// Checks everything that can be checked without allocating a field.
/// Throws ConfigError.
RunPlan validate(const RunConfig& cfg);

/// Echo of the effective configuration, in config_keys() order.
ConfigEntries describe(const RunConfig& cfg);

struct RunResult {
  bool ok = false;
  std::string failure;
  long steps = 0;
  double t_final = 0.0;
  double dt = 0.0;
  std::vector<DiagnosticSample> diagnostics;
  double initial_mass = 0.0;
  double max_relative_mass_drift = 0.0;
  double max_density_violation = 0.0;  ///< IDP, over all stages
  double max_entropy_violation = 0.0;  ///< IDP, over all stages
  long idp_fallback_nodes = 0;
  double min_rho = 0.0;  ///< over all stages
  double min_p = 0.0;    ///< over all stages
  double wall_seconds = 0.0;
  SolutionField field;
  BlendField blend;
  std::vector<std::string> files;
};

/// Runs one configuration. Configuration problems throw ConfigError before
/// anything is written; numerical failures are reported in the result (and
/// in a partial manifest) instead of thrown. `log` receives progress lines.
RunResult run_simulation(const RunConfig& cfg, std::ostream* log = nullptr);

}  // namespace sbpmhd
