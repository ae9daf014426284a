#include "sbpmhd/limiting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "sbpmhd/error.hpp"

namespace sbpmhd {

LimiterKind parse_limiter(std::string_view name) {
  if (name == "none") return LimiterKind::None;
  if (name == "fv") return LimiterKind::FV;
  if (name == "loehner") return LimiterKind::Loehner;
  if (name == "idp") return LimiterKind::IDP;
  throw ConfigError("unknown limiter '" + std::string(name) + "' (expected none|loehner|idp|fv)");
}

std::string_view to_string(LimiterKind kind) {
  switch (kind) {
    case LimiterKind::None: return "none";
    case LimiterKind::FV: return "fv";
    case LimiterKind::Loehner: return "loehner";
    case LimiterKind::IDP: return "idp";
  }
  return "none";
}

double loehner_indicator(double um, double u0, double up, double dxm, double dxp, double eps) {
  const double num = std::abs(dxm * up - (dxm + dxp) * u0 + dxp * um);
  const double den = dxm * std::abs(up - u0) + dxp * std::abs(u0 - um) +
                     eps * (dxm * std::abs(up) + (dxm + dxp) * std::abs(u0) + dxp * std::abs(um));
  if (!(den > 0.0)) return 0.0;
  return std::min(num / den, 1.0);
}

BlendField loehner_alpha(const SolutionField& field, const SpatialScheme& scheme, BlendMode mode,
                         double eps) {
  const int n = field.n_nodes();
  const int K = field.num_elements();
  const auto& xi = scheme.op.nodes;
  const double hx = 0.5 * scheme.mesh.dx();
  const double hy = 0.5 * scheme.mesh.dy();
  BlendField blend(K, n, mode);

#pragma omp parallel for schedule(static)
  for (int e = 0; e < K; ++e) {
    auto rp = [&](int i, int j) {
      const ConsState& u = field.at(e, i, j);
      return u[kRho] * pressure(u, scheme.eq);
    };
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        double a = 0.0;
        if (i > 0 && i < n - 1)
          a = std::max(a, loehner_indicator(rp(i - 1, j), rp(i, j), rp(i + 1, j),
                                            hx * (xi[i] - xi[i - 1]), hx * (xi[i + 1] - xi[i]),
                                            eps));
        if (j > 0 && j < n - 1)
          a = std::max(a, loehner_indicator(rp(i, j - 1), rp(i, j), rp(i, j + 1),
                                            hy * (xi[j] - xi[j - 1]), hy * (xi[j + 1] - xi[j]),
                                            eps));
        blend.node_alpha[blend.node_index(e, i, j)] = a;
      }
    }
  }
  aggregate(blend, scheme.mesh);
  return blend;
}

namespace {

struct NodeRef {
  int e, i, j;
};

// Neighbouring node one step along `axis` in direction `dir` (+1 / -1),
// crossing element faces periodically.
NodeRef step(const Mesh2D& mesh, int n, NodeRef r, int axis, int dir) {
  int ex = mesh.element_x(r.e);
  int ey = mesh.element_y(r.e);
  if (axis == 0) {
    r.i += dir;
    if (r.i < 0) {
      r.i = n - 1;
      ex = (ex + mesh.nx - 1) % mesh.nx;
    } else if (r.i >= n) {
      r.i = 0;
      ex = (ex + 1) % mesh.nx;
    }
  } else {
    r.j += dir;
    if (r.j < 0) {
      r.j = n - 1;
      ey = (ey + mesh.ny - 1) % mesh.ny;
    } else if (r.j >= n) {
      r.j = 0;
      ey = (ey + 1) % mesh.ny;
    }
  }
  r.e = mesh.element_index(ex, ey);
  return r;
}

}  // namespace

void aggregate(BlendField& blend, const Mesh2D& mesh) {
  const int n = blend.n_nodes;
  const int K = blend.num_elements;
  if (K != mesh.num_elements()) throw std::invalid_argument("aggregate: mesh mismatch");

  if (blend.mode == BlendMode::ElementWise) {
#pragma omp parallel for schedule(static)
    for (int e = 0; e < K; ++e) {
      double amax = 0.0;
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) amax = std::max(amax, blend.node_alpha[blend.node_index(e, i, j)]);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) blend.node_alpha[blend.node_index(e, i, j)] = amax;
      for (int l = 0; l < n; ++l)
        for (int k = 0; k <= n; ++k) {
          blend.alpha_x[blend.interface_index(e, l, k)] = amax;
          blend.alpha_y[blend.interface_index(e, l, k)] = amax;
        }
    }
    return;
  }

  auto node = [&](NodeRef r) { return blend.node_alpha[blend.node_index(r.e, r.i, r.j)]; };
#pragma omp parallel for schedule(static)
  for (int e = 0; e < K; ++e) {
    for (int l = 0; l < n; ++l) {
      for (int k = 0; k <= n; ++k) {
        // x-interface k of line j = l: between node (k-1, l) and (k, l).
        NodeRef right{e, std::min(k, n - 1), l};
        NodeRef left = k == 0 ? step(mesh, n, NodeRef{e, 0, l}, 0, -1) : NodeRef{e, k - 1, l};
        if (k == n) right = step(mesh, n, NodeRef{e, n - 1, l}, 0, +1);
        blend.alpha_x[blend.interface_index(e, l, k)] = std::max(node(left), node(right));

        NodeRef up{e, l, std::min(k, n - 1)};
        NodeRef down = k == 0 ? step(mesh, n, NodeRef{e, l, 0}, 1, -1) : NodeRef{e, l, k - 1};
        if (k == n) up = step(mesh, n, NodeRef{e, l, n - 1}, 1, +1);
        blend.alpha_y[blend.interface_index(e, l, k)] = std::max(node(down), node(up));
      }
    }
  }
}

IdpBounds idp_bounds(const SolutionField& u_fv, const Mesh2D& mesh, const EquationParams& eq) {
  const int n = u_fv.n_nodes();
  const int K = u_fv.num_elements();
  IdpBounds b;
  b.rho_min.resize(u_fv.size());
  b.rho_max.resize(u_fv.size());
  b.theta_min.resize(u_fv.size());

#pragma omp parallel for schedule(static)
  for (int e = 0; e < K; ++e)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const NodeRef c{e, i, j};
        const ConsState& uc = u_fv.at(e, i, j);
        double rmin = uc[kRho];
        double rmax = uc[kRho];
        double tmin = modified_entropy(uc, eq);
        for (int axis = 0; axis < 2; ++axis)
          for (int dir : {-1, 1}) {
            const NodeRef r = step(mesh, n, c, axis, dir);
            const ConsState& u = u_fv.at(r.e, r.i, r.j);
            rmin = std::min(rmin, u[kRho]);
            rmax = std::max(rmax, u[kRho]);
            tmin = std::min(tmin, modified_entropy(u, eq));
          }
        const std::size_t k = u_fv.index(e, i, j);
        b.rho_min[k] = rmin;
        b.rho_max[k] = rmax;
        b.theta_min[k] = tmin;
      }
  return b;
}

AlphaResult zalesak_density_alpha(double rho_ho, double rho_fv, double rho_min, double rho_max) {
  if (rho_ho >= rho_min && rho_ho <= rho_max) return {0.0, false};
  const double bound = rho_ho < rho_min ? rho_min : rho_max;
  const double diff = rho_ho - rho_fv;
  if (diff == 0.0 || !std::isfinite(diff)) return {1.0, true};
  const double a = 1.0 - (bound - rho_fv) / diff;
  return {std::clamp(a, 0.0, 1.0), false};
}

AlphaResult entropy_newton_alpha(const ConsState& u_ho, const ConsState& u_fv, double theta_min,
                                 const EquationParams& eq, double tol_alpha, int max_iter) {
  const ConsState du = u_fv - u_ho;
  auto state = [&](double a) { return (1.0 - a) * u_ho + a * u_fv; };
  // Inadmissible states count as violating.
  auto g = [&](double a) {
    const ConsState u = state(a);
    if (!is_admissible(u, eq)) return -std::numeric_limits<double>::infinity();
    return modified_entropy(u, eq) - theta_min;
  };

  double g0 = g(0.0);
  if (g0 >= 0.0) return {0.0, false};
  const double g1 = g(1.0);
  const double tol_g = 1e-12 * std::max(std::abs(theta_min), std::numeric_limits<double>::min());
  if (!(g1 >= -tol_g)) return {1.0, true};

  double lo = 0.0;
  double hi = 1.0;
  double a = 0.0;
  double ga = g0;
  for (int it = 0; it < max_iter; ++it) {
    double next = 0.5 * (lo + hi);
    if (std::isfinite(ga)) {
      const double dg = dot(modified_entropy_gradient(state(a), eq), du);
      if (dg > 0.0 && std::isfinite(dg)) {
        const double cand = a - ga / dg;
        if (cand > lo && cand < hi) next = cand;
      }
    }
    a = next;
    ga = g(a);
    if (ga >= 0.0) {
      hi = a;
      if (ga <= tol_g) return {hi, false};
    } else {
      lo = a;
      if (-ga <= tol_g) {
        // Converged from below: step just past the root onto the safe side.
        const double probe = std::min(hi, a + tol_alpha);
        if (g(probe) >= 0.0) return {probe, false};
        lo = probe;
      }
    }
    if (hi - lo <= tol_alpha) return {hi, false};
  }
  return {hi, true};
}

namespace {

double density_violation(double rho, double rmin, double rmax) {
  return std::max({rmin - rho, rho - rmax, 0.0});
}

}  // namespace

IdpStageResult idp_limited_update(const SolutionField& u, double dt,
                                  const StaggeredFluxField& fluxes, const SpatialScheme& scheme,
                                  BlendMode mode, const IdpOptions& opt) {
  const int n = u.n_nodes();
  const int K = u.num_elements();
  const std::size_t N = u.size();
  const EquationParams& eq = scheme.eq;

  BlendField blend(K, n, mode, 1.0);
  const SolutionField u_fv = lincomb(1.0, u, dt, blended_rate(fluxes, blend, scheme));
  const IdpBounds bounds = idp_bounds(u_fv, scheme.mesh, eq);

  std::vector<double> alpha(N, 0.0);
  std::vector<char> density_limited(N, 0);
  blend.fill(0.0);
  SolutionField cand = lincomb(1.0, u, dt, blended_rate(fluxes, blend, scheme));

  IdpStageReport rep;
  long flagged = 0;
  auto tol_rho = [&](std::size_t k) { return opt.check_tol * std::max(1.0, std::abs(bounds.rho_max[k])); };
  auto tol_theta = [&](std::size_t k) {
    return opt.check_tol * std::max(1.0, std::abs(bounds.theta_min[k]));
  };
  auto entropy_active = [&](std::size_t k) {
    return opt.entropy && (!opt.entropy_only_where_density_limited || density_limited[k]);
  };
  auto violates = [&](std::size_t k) {
    const ConsState& c = cand[k];
    if (!is_admissible(c, eq)) return true;
    if (opt.density &&
        density_violation(c[kRho], bounds.rho_min[k], bounds.rho_max[k]) > tol_rho(k))
      return true;
    if (entropy_active(k) && bounds.theta_min[k] - modified_entropy(c, eq) > tol_theta(k))
      return true;
    return false;
  };
  auto reblend = [&]() {
    blend.node_alpha = alpha;
    aggregate(blend, scheme.mesh);
    cand = lincomb(1.0, u, dt, blended_rate(fluxes, blend, scheme));
  };

  for (int pass = 0; pass < opt.max_passes; ++pass) {
    bool changed = false;
#pragma omp parallel for schedule(static) reduction(|| : changed) reduction(+ : flagged)
    for (std::size_t k = 0; k < N; ++k) {
      const ConsState& c = cand[k];
      double beta = 0.0;
      if (opt.density) {
        const double viol = density_violation(c[kRho], bounds.rho_min[k], bounds.rho_max[k]);
        if (viol > tol_rho(k) || !std::isfinite(c[kRho])) {
          const AlphaResult r =
              zalesak_density_alpha(c[kRho], u_fv[k][kRho], bounds.rho_min[k], bounds.rho_max[k]);
          beta = r.alpha;
          flagged += r.flagged ? 1 : 0;
          density_limited[k] = 1;
        }
      }
      if (entropy_active(k)) {
        const ConsState cb = (1.0 - beta) * c + beta * u_fv[k];
        const bool bad = !is_admissible(cb, eq) ||
                         bounds.theta_min[k] - modified_entropy(cb, eq) > tol_theta(k);
        if (bad) {
          const AlphaResult r = entropy_newton_alpha(cb, u_fv[k], bounds.theta_min[k], eq);
          beta = 1.0 - (1.0 - beta) * (1.0 - r.alpha);
          flagged += r.flagged ? 1 : 0;
        }
      }
      if (beta > 0.0) {
        alpha[k] = 1.0 - (1.0 - alpha[k]) * (1.0 - beta);
        changed = true;
      }
    }
    if (!changed) break;
    rep.passes = pass + 1;
    reblend();
  }

  // Fallback: pure FV at any node still out of bounds. A node whose incident
  // interfaces all carry alpha = 1 reproduces u_fv exactly, so this ends.
  for (std::size_t guard = 0; guard <= N; ++guard) {
    long forced = 0;
    for (std::size_t k = 0; k < N; ++k)
      if (violates(k) && alpha[k] < 1.0) {
        alpha[k] = 1.0;
        ++forced;
      }
    if (forced == 0) break;
    rep.fallback_nodes += forced;
    reblend();
  }

  for (std::size_t k = 0; k < N; ++k) {
    const ConsState& c = cand[k];
    if (opt.density)
      rep.max_density_violation = std::max(
          rep.max_density_violation, density_violation(c[kRho], bounds.rho_min[k], bounds.rho_max[k]));
    if (entropy_active(k))
      rep.max_entropy_violation = std::max(
          rep.max_entropy_violation, std::max(0.0, bounds.theta_min[k] - modified_entropy(c, eq)));
    rep.density_limited_nodes += density_limited[k] ? 1 : 0;
  }
  rep.flagged_nodes = flagged;
  return IdpStageResult{std::move(cand), std::move(blend), rep};
}

}  // namespace sbpmhd
