#pragma once

#include <span>
#include <string>
#include <vector>

#include "sbpmhd/blend_field.hpp"
#include "sbpmhd/limiting.hpp"
#include "sbpmhd/mesh.hpp"
#include "sbpmhd/semidisc.hpp"

namespace sbpmhd {

/// a + w (b - a); exact when b == a.
inline double lerp_toward(double a, double b, double w) { return a + w * (b - a); }
SolutionField lerp_toward(const SolutionField& a, const SolutionField& b, double w);

/// Three-stage SSP Runge-Kutta step in Shu-Osher form. `euler(u, stage)`
/// must return the (limited) forward-Euler update u + dt L(u).
template <class Field, class EulerStep>
Field ssp_rk3_step(const Field& un, EulerStep&& euler) {
  const Field u1 = euler(un, 0);
  const Field u2 = lerp_toward(un, euler(u1, 1), 0.25);
  return lerp_toward(un, euler(u2, 2), 2.0 / 3.0);
}

/// (1/V) sum_e sum_ij J w_i w_j alpha_ij over the node alphas of one stage.
double mean_alpha_stage(const BlendField& blend, const SpatialScheme& scheme);

/// Average of the per-stage values; throws std::invalid_argument if empty.
double mean_alpha(std::span<const double> stage_values);

/// S = -sum J w_i w_j rho s / (gamma - 1). Throws NumericalError at the
/// first inadmissible node.
double total_entropy(const SolutionField& field, const SpatialScheme& scheme);

double total_mass(const SolutionField& field, const SpatialScheme& scheme);

struct FieldExtrema {
  double min_rho = 0.0;
  double min_p = 0.0;
};
FieldExtrema field_extrema(const SolutionField& field, const EquationParams& eq);

struct LimiterConfig {
  LimiterKind kind = LimiterKind::None;
  BlendMode mode = BlendMode::SubcellWise;
  double loehner_eps = 0.2;
  IdpOptions idp;
};

struct StageRecord {
  int stage = 0;
  double mean_alpha = 0.0;
  double min_rho = 0.0;
  double min_p = 0.0;
  IdpStageReport idp;
};

struct StepOutput {
  std::vector<StageRecord> stages;
  BlendField last_blend;  ///< blending of the final stage
};

/// Hybrid SBP / subcell-FV discretization with the configured limiter.
class HybridSolver {
 public:
  HybridSolver(SpatialScheme scheme, LimiterConfig limiter);

  const SpatialScheme& scheme() const { return scheme_; }
  const LimiterConfig& limiter() const { return limiter_; }

  /// Blending the limiter would choose a priori for `u` (zero for IDP).
  BlendField a_priori_blend(const SolutionField& u) const;

  /// Limited forward-Euler update u + dt L(u).
  SolutionField euler_stage(const SolutionField& u, double dt, StageRecord& rec,
                            BlendField& blend) const;

  /// One SSP-RK3 step from time t. Throws NumericalError naming the stage,
  /// node and time if a stage produces a non-finite or inadmissible state.
  SolutionField step(const SolutionField& u, double dt, double t, StepOutput& out) const;

 private:
  SpatialScheme scheme_;
  LimiterConfig limiter_;
};

struct DiagnosticSample {
  double t = 0.0;
  double mean_alpha = 0.0;  ///< NaN for a sample without stages
  double total_entropy = 0.0;
  double min_rho = 0.0;
  double min_p = 0.0;
};

/// Collects stage statistics and samples the diagnostics every `interval`.
class DiagnosticsRecorder {
 public:
  explicit DiagnosticsRecorder(double interval = 0.01) : interval_(interval) {}

  double interval() const { return interval_; }
  void add_stage(const StageRecord& rec);
  /// True when t has reached the next sample time.
  bool due(double t) const;
  /// Closes the current window at time t.
  void sample(double t, const SolutionField& field, const SpatialScheme& scheme);

  const std::vector<DiagnosticSample>& samples() const { return samples_; }
  void write_csv(const std::string& path) const;

 private:
  double interval_;
  long next_index_ = 0;
  std::vector<double> window_alpha_;
  double window_min_rho_ = 0.0;
  double window_min_p_ = 0.0;
  bool window_open_ = false;
  std::vector<DiagnosticSample> samples_;
};

}  // namespace sbpmhd
