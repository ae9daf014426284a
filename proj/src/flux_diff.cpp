#include "sbpmhd/flux_diff.hpp"

#include <stdexcept>

namespace sbpmhd {

BlendMode parse_blend_mode(std::string_view name) {
  if (name == "element") return BlendMode::ElementWise;
  if (name == "subcell") return BlendMode::SubcellWise;
  throw std::invalid_argument("unknown blend mode '" + std::string(name) +
                              "' (expected element|subcell)");
}

std::string_view to_string(BlendMode mode) {
  return mode == BlendMode::ElementWise ? "element" : "subcell";
}

BlendField::BlendField(int num_elements_, int n_nodes_, BlendMode mode_, double value)
    : num_elements(num_elements_), n_nodes(n_nodes_), mode(mode_),
      node_alpha(static_cast<std::size_t>(num_elements_) * n_nodes_ * n_nodes_, value),
      alpha_x(static_cast<std::size_t>(num_elements_) * n_nodes_ * (n_nodes_ + 1), value),
      alpha_y(alpha_x.size(), value) {}

void BlendField::fill(double value) {
  std::fill(node_alpha.begin(), node_alpha.end(), value);
  std::fill(alpha_x.begin(), alpha_x.end(), value);
  std::fill(alpha_y.begin(), alpha_y.end(), value);
}

void LineWorkspace::resize(int n) {
  powell_loc.resize(n);
  glm_loc.resize(n);
  node_flux.resize(n);
  row_flux.resize(n);
  row_powell.resize(n);
  row_glm.resize(n);
}

void compute_staggered_sbp(std::span<const ConsState> line, const ConsState& outer_L,
                           const ConsState& outer_R, const LineContext& ctx,
                           std::span<ConsState> gamma_left, std::span<ConsState> gamma_right,
                           LineWorkspace& ws) {
  const int n = static_cast<int>(line.size());
  ws.resize(n);
  const DenseMatrix& S = ctx.op.S;
  const EquationParams& eq = ctx.eq;
  const bool central = ctx.volume_flux == VolumeFluxKind::Central ||
                       !volume_flux_available(ctx.volume_flux, eq);

  if (central)
    for (int l = 0; l < n; ++l) ws.node_flux[l] = advective_flux(line[l], ctx.metric, eq);
  if (ctx.nonconservative) {
    for (int l = 0; l < n; ++l) {
      ws.powell_loc[l] = powell_phi(line[l], eq);
      ws.glm_loc[l] = glm_phi(line[l], ctx.metric, eq);
    }
  }

  // Row sums sum_m S_lm f*_(l,m) (and the symmetric non-conservative
  // factors), inner m-loop in ascending order.
  for (int l = 0; l < n; ++l) {
    ConsState rf;
    double rp = 0.0;
    double rg = 0.0;
    for (int m = 0; m < n; ++m) {
      const double s = S(l, m);
      if (s == 0.0) continue;
      const ConsState fstar =
          central ? 0.5 * (ws.node_flux[l] + ws.node_flux[m])
                  : volume_flux(ctx.volume_flux, line[l], line[m], ctx.metric, eq);
      rf += s * fstar;
      if (ctx.nonconservative) {
        rp += s * dot(average(line[l].magnetic(), line[m].magnetic()), ctx.metric);
        rg += s * (0.5 * (line[l][kPsi] + line[m][kPsi]));
      }
    }
    ws.row_flux[l] = rf;
    ws.row_powell[l] = rp;
    ws.row_glm[l] = rg;
  }

  gamma_left[0] = boundary_gamma(line[0], outer_L, true, ctx);
  gamma_right[n - 1] = boundary_gamma(line[n - 1], outer_R, false, ctx);

  ConsState fbar;
  double pbar = 0.0;
  double gbar = 0.0;
  for (int j = 0; j + 1 < n; ++j) {
    fbar += ws.row_flux[j];
    pbar += ws.row_powell[j];
    gbar += ws.row_glm[j];
    gamma_right[j] = fbar;
    gamma_left[j + 1] = fbar;
    if (ctx.nonconservative) {
      gamma_right[j] += pbar * ws.powell_loc[j] + gbar * ws.glm_loc[j];
      gamma_left[j + 1] += pbar * ws.powell_loc[j + 1] + gbar * ws.glm_loc[j + 1];
    }
  }
}

StaggeredFluxSet compute_staggered_sbp(std::span<const ConsState> line, const ConsState& outer_L,
                                       const ConsState& outer_R, const LineContext& ctx) {
  StaggeredFluxSet set;
  set.variant = FluxVariant::SBP;
  set.gamma_left.resize(line.size());
  set.gamma_right.resize(line.size());
  LineWorkspace ws;
  compute_staggered_sbp(line, outer_L, outer_R, ctx, set.gamma_left, set.gamma_right, ws);
  return set;
}

void compute_staggered_fv(std::span<const ConsState> line, const ConsState& outer_L,
                          const ConsState& outer_R, const LineContext& ctx,
                          std::span<ConsState> gamma_left, std::span<ConsState> gamma_right) {
  const int n = static_cast<int>(line.size());
  const EquationParams& eq = ctx.eq;

  gamma_left[0] = boundary_gamma(line[0], outer_L, true, ctx);
  gamma_right[n - 1] = boundary_gamma(line[n - 1], outer_R, false, ctx);

  for (int j = 0; j + 1 < n; ++j) {
    const ConsState& a = line[j];
    const ConsState& b = line[j + 1];
    const ConsState fc = rusanov_surface_flux(a, b, ctx.metric, eq);
    gamma_right[j] = fc;
    gamma_left[j + 1] = fc;
    if (ctx.nonconservative) {
      gamma_right[j] += surface_noncons(a, b, ctx.metric, ctx.metric, eq);
      gamma_left[j + 1] += surface_noncons(b, a, ctx.metric, ctx.metric, eq);
    }
  }
}

StaggeredFluxSet compute_staggered_fv(std::span<const ConsState> line, const ConsState& outer_L,
                                      const ConsState& outer_R, const LineContext& ctx) {
  StaggeredFluxSet set;
  set.variant = FluxVariant::FV;
  set.gamma_left.resize(line.size());
  set.gamma_right.resize(line.size());
  compute_staggered_fv(line, outer_L, outer_R, ctx, set.gamma_left, set.gamma_right);
  return set;
}

namespace {

inline ConsState blend(double alpha, const ConsState& high, const ConsState& low) {
  return (1.0 - alpha) * high + alpha * low;
}

void check_alpha(double a) {
  if (!(a >= 0.0 && a <= 1.0))
    throw std::invalid_argument("blending coefficient outside [0, 1]");
}

}  // namespace

void blended_rhs(const StaggeredFluxSet& sbp, const StaggeredFluxSet& fv,
                 std::span<const double> alpha, std::span<const double> weights, double J,
                 std::span<ConsState> out) {
  const std::size_t n = sbp.gamma_left.size();
  if (alpha.size() != n + 1) throw std::invalid_argument("blended_rhs: need n+1 interface alphas");
  for (double a : alpha) check_alpha(a);
  for (std::size_t j = 0; j < n; ++j) {
    const ConsState gl = blend(alpha[j], sbp.gamma_left[j], fv.gamma_left[j]);
    const ConsState gr = blend(alpha[j + 1], sbp.gamma_right[j], fv.gamma_right[j]);
    out[j] = (1.0 / (weights[j] * J)) * (gl - gr);
  }
}

StaggeredFluxField::StaggeredFluxField(int num_elements, int n_nodes)
    : num_elements_(num_elements), n_(n_nodes) {
  const std::size_t total = 2u * static_cast<std::size_t>(num_elements) * n_nodes * n_nodes;
  sbp_left_.resize(total);
  sbp_right_.resize(total);
  fv_left_.resize(total);
  fv_right_.resize(total);
}

std::size_t StaggeredFluxField::line_offset(int axis, int e, int line) const {
  return ((static_cast<std::size_t>(axis) * num_elements_ + e) * n_ + line) * n_;
}

std::vector<ConsState>& StaggeredFluxField::store(FluxVariant v, bool left_side) {
  if (v == FluxVariant::SBP) return left_side ? sbp_left_ : sbp_right_;
  return left_side ? fv_left_ : fv_right_;
}

const std::vector<ConsState>& StaggeredFluxField::store(FluxVariant v, bool left_side) const {
  if (v == FluxVariant::SBP) return left_side ? sbp_left_ : sbp_right_;
  return left_side ? fv_left_ : fv_right_;
}

std::span<ConsState> StaggeredFluxField::left(FluxVariant v, int axis, int e, int line) {
  return std::span<ConsState>(store(v, true)).subspan(line_offset(axis, e, line), n_);
}
std::span<ConsState> StaggeredFluxField::right(FluxVariant v, int axis, int e, int line) {
  return std::span<ConsState>(store(v, false)).subspan(line_offset(axis, e, line), n_);
}
std::span<const ConsState> StaggeredFluxField::left(FluxVariant v, int axis, int e,
                                                    int line) const {
  return std::span<const ConsState>(store(v, true)).subspan(line_offset(axis, e, line), n_);
}
std::span<const ConsState> StaggeredFluxField::right(FluxVariant v, int axis, int e,
                                                     int line) const {
  return std::span<const ConsState>(store(v, false)).subspan(line_offset(axis, e, line), n_);
}

StaggeredFluxField compute_staggered_field(const SolutionField& field,
                                           const SpatialScheme& scheme) {
  require_admissible(field, scheme.eq);
  const FaceTraces traces = gather_interface_traces(field, scheme.mesh);
  const int n = field.n_nodes();
  const int K = field.num_elements();
  StaggeredFluxField out(K, n);

#pragma omp parallel
  {
    LineWorkspace ws;
    std::vector<ConsState> line(n);
#pragma omp for schedule(static)
    for (int e = 0; e < K; ++e) {
      for (int axis = 0; axis < 2; ++axis) {
        const LineContext ctx = line_context(scheme, e, axis);
        for (int l = 0; l < n; ++l) {
          for (int k = 0; k < n; ++k) line[k] = axis == 0 ? field.at(e, k, l) : field.at(e, l, k);
          const std::size_t t = traces.index(e, l);
          const ConsState& outer_L = axis == 0 ? traces.west[t] : traces.south[t];
          const ConsState& outer_R = axis == 0 ? traces.east[t] : traces.north[t];
          compute_staggered_sbp(line, outer_L, outer_R, ctx, out.left(FluxVariant::SBP, axis, e, l),
                                out.right(FluxVariant::SBP, axis, e, l), ws);
          compute_staggered_fv(line, outer_L, outer_R, ctx, out.left(FluxVariant::FV, axis, e, l),
                               out.right(FluxVariant::FV, axis, e, l));
        }
      }
    }
  }
  return out;
}

SolutionField blended_rate(const StaggeredFluxField& fluxes, const BlendField& blend_field,
                           const SpatialScheme& scheme) {
  const int n = fluxes.n_nodes();
  const int K = fluxes.num_elements();
  if (blend_field.num_elements != K || blend_field.n_nodes != n)
    throw std::invalid_argument("blended_rate: blend field shape mismatch");
  const auto& w = scheme.op.weights;
  SolutionField rate(K, n);

  bool alpha_ok = true;
#pragma omp parallel for schedule(static) reduction(&& : alpha_ok)
  for (int e = 0; e < K; ++e) {
    const double inv_J = 1.0 / scheme.mesh.metric(e).J;
    for (int axis = 0; axis < 2; ++axis) {
      const auto& alpha = axis == 0 ? blend_field.alpha_x : blend_field.alpha_y;
      for (int l = 0; l < n; ++l) {
        const auto sl = fluxes.left(FluxVariant::SBP, axis, e, l);
        const auto sr = fluxes.right(FluxVariant::SBP, axis, e, l);
        const auto fl = fluxes.left(FluxVariant::FV, axis, e, l);
        const auto fr = fluxes.right(FluxVariant::FV, axis, e, l);
        const double* a = alpha.data() + blend_field.interface_index(e, l, 0);
        for (int k = 0; k <= n; ++k) alpha_ok = alpha_ok && a[k] >= 0.0 && a[k] <= 1.0;
        for (int k = 0; k < n; ++k) {
          const ConsState d = blend(a[k], sl[k], fl[k]) - blend(a[k + 1], sr[k], fr[k]);
          ConsState& r = axis == 0 ? rate.at(e, k, l) : rate.at(e, l, k);
          r += (1.0 / w[k]) * d;
        }
      }
    }
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) rate.at(e, i, j) *= inv_J;
  }
  if (!alpha_ok) throw std::invalid_argument("blending coefficient outside [0, 1]");
  return rate;
}

SolutionField compute_rhs_fluxdiff(const SolutionField& field, const SpatialScheme& scheme,
                                   const BlendField& blend_field) {
  return blended_rate(compute_staggered_field(field, scheme), blend_field, scheme);
}

SolutionField compute_rhs_fluxdiff(const SolutionField& field, const SpatialScheme& scheme) {
  return compute_rhs_fluxdiff(
      field, scheme, BlendField(field.num_elements(), field.n_nodes(), BlendMode::SubcellWise));
}

}  // namespace sbpmhd
