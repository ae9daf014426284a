#include "sbpmhd/time_integration.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "sbpmhd/error.hpp"
#include "sbpmhd/flux_diff.hpp"

namespace sbpmhd {

SolutionField lerp_toward(const SolutionField& a, const SolutionField& b, double w) {
  if (!a.same_shape(b)) throw std::invalid_argument("lerp_toward: field shapes differ");
  SolutionField out(a.num_elements(), a.n_nodes());
  const std::size_t n = a.size();
#pragma omp parallel for schedule(static)
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] + w * (b[k] - a[k]);
  return out;
}

double mean_alpha_stage(const BlendField& blend, const SpatialScheme& scheme) {
  const int n = blend.n_nodes;
  const auto& w = scheme.op.weights;
  double sum = 0.0;
  for (int e = 0; e < blend.num_elements; ++e) {
    const double J = scheme.mesh.metric(e).J;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) sum += J * w[i] * w[j] * blend.node_alpha[blend.node_index(e, i, j)];
  }
  return sum / scheme.mesh.area();
}

double mean_alpha(std::span<const double> stage_values) {
  if (stage_values.empty()) throw std::invalid_argument("mean_alpha: empty sample window");
  double s = 0.0;
  for (double v : stage_values) s += v;
  return s / static_cast<double>(stage_values.size());
}

double total_entropy(const SolutionField& field, const SpatialScheme& scheme) {
  const int n = field.n_nodes();
  const auto& w = scheme.op.weights;
  double sum = 0.0;
  for (int e = 0; e < field.num_elements(); ++e) {
    const double J = scheme.mesh.metric(e).J;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const ConsState& u = field.at(e, i, j);
        if (!is_admissible(u, scheme.eq))
          throw NumericalError("total_entropy: inadmissible node", e, i, j);
        sum += J * w[i] * w[j] * entropy_density(u, scheme.eq);
      }
  }
  return sum;
}

double total_mass(const SolutionField& field, const SpatialScheme& scheme) {
  const int n = field.n_nodes();
  const auto& w = scheme.op.weights;
  double sum = 0.0;
  for (int e = 0; e < field.num_elements(); ++e) {
    const double J = scheme.mesh.metric(e).J;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) sum += J * w[i] * w[j] * field.at(e, i, j)[kRho];
  }
  return sum;
}

FieldExtrema field_extrema(const SolutionField& field, const EquationParams& eq) {
  FieldExtrema x{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  for (const ConsState& u : field.values()) {
    x.min_rho = std::min(x.min_rho, u[kRho]);
    x.min_p = std::min(x.min_p, pressure(u, eq));
  }
  return x;
}

HybridSolver::HybridSolver(SpatialScheme scheme, LimiterConfig limiter)
    : scheme_(std::move(scheme)), limiter_(limiter) {}

BlendField HybridSolver::a_priori_blend(const SolutionField& u) const {
  const int K = u.num_elements(), n = u.n_nodes();
  switch (limiter_.kind) {
    case LimiterKind::Loehner: return loehner_alpha(u, scheme_, limiter_.mode, limiter_.loehner_eps);
    case LimiterKind::FV: return BlendField(K, n, limiter_.mode, 1.0);
    case LimiterKind::None:
    case LimiterKind::IDP: break;
  }
  return BlendField(K, n, limiter_.mode, 0.0);
}

SolutionField HybridSolver::euler_stage(const SolutionField& u, double dt, StageRecord& rec,
                                        BlendField& blend) const {
  const StaggeredFluxField fluxes = compute_staggered_field(u, scheme_);
  SolutionField out;
  if (limiter_.kind == LimiterKind::IDP) {
    IdpStageResult r = idp_limited_update(u, dt, fluxes, scheme_, limiter_.mode, limiter_.idp);
    out = std::move(r.update);
    blend = std::move(r.blend);
    rec.idp = r.report;
  } else {
    blend = a_priori_blend(u);
    out = lincomb(1.0, u, dt, blended_rate(fluxes, blend, scheme_));
  }
  rec.mean_alpha = mean_alpha_stage(blend, scheme_);
  return out;
}

namespace {

void check_stage(const SolutionField& u, const EquationParams& eq, int stage, double t) {
  const int n = u.n_nodes();
  for (int e = 0; e < u.num_elements(); ++e)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const ConsState& x = u.at(e, i, j);
        if (!all_finite(x) || !is_admissible(x, eq))
          throw NumericalError((all_finite(x) ? "inadmissible state" : "non-finite state") +
                                   std::string(" after RK stage ") + std::to_string(stage + 1) +
                                   " of the step from t=" + std::to_string(t) + " at element " +
                                   std::to_string(e) + ", node (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")",
                               e, i, j);
      }
}

}  // namespace

SolutionField HybridSolver::step(const SolutionField& u, double dt, double t,
                                 StepOutput& out) const {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  out.stages.clear();
  auto euler = [&](const SolutionField& x, int stage) {
    StageRecord rec;
    rec.stage = stage;
    SolutionField y = euler_stage(x, dt, rec, out.last_blend);
    check_stage(y, scheme_.eq, stage, t);
    const FieldExtrema ext = field_extrema(y, scheme_.eq);
    rec.min_rho = ext.min_rho;
    rec.min_p = ext.min_p;
    out.stages.push_back(rec);
    return y;
  };
  SolutionField next = ssp_rk3_step(u, euler);
  check_stage(next, scheme_.eq, 2, t);
  return next;
}

void DiagnosticsRecorder::add_stage(const StageRecord& rec) {
  window_alpha_.push_back(rec.mean_alpha);
  if (!window_open_) {
    window_min_rho_ = rec.min_rho;
    window_min_p_ = rec.min_p;
    window_open_ = true;
  } else {
    window_min_rho_ = std::min(window_min_rho_, rec.min_rho);
    window_min_p_ = std::min(window_min_p_, rec.min_p);
  }
}

bool DiagnosticsRecorder::due(double t) const {
  return t >= static_cast<double>(next_index_) * interval_ - 1e-9 * interval_;
}

void DiagnosticsRecorder::sample(double t, const SolutionField& field, const SpatialScheme& scheme) {
  if (!samples_.empty() && !(t > samples_.back().t))
    throw std::invalid_argument("diagnostic sample times must increase");
  DiagnosticSample s;
  s.t = t;
  s.mean_alpha = window_alpha_.empty() ? std::numeric_limits<double>::quiet_NaN()
                                       : mean_alpha(window_alpha_);
  s.total_entropy = total_entropy(field, scheme);
  const FieldExtrema ext = field_extrema(field, scheme.eq);
  s.min_rho = window_open_ ? std::min(window_min_rho_, ext.min_rho) : ext.min_rho;
  s.min_p = window_open_ ? std::min(window_min_p_, ext.min_p) : ext.min_p;
  samples_.push_back(s);
  window_alpha_.clear();
  window_open_ = false;
  while (static_cast<double>(next_index_) * interval_ <= t + 1e-9 * interval_) ++next_index_;
}

void DiagnosticsRecorder::write_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << "t,mean_alpha,total_entropy,min_rho,min_p\n";
  out.precision(17);
  for (const auto& s : samples_)
    out << s.t << ',' << s.mean_alpha << ',' << s.total_entropy << ',' << s.min_rho << ','
        << s.min_p << '\n';
}

}  // namespace sbpmhd
