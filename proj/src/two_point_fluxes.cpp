#include "sbpmhd/two_point_fluxes.hpp"

#include <cmath>
#include <utility>

#include "sbpmhd/error.hpp"

namespace sbpmhd {

VolumeFluxKind parse_volume_flux(std::string_view name) {
  if (name == "central") return VolumeFluxKind::Central;
  if (name == "ec") return VolumeFluxKind::EntropyConservative;
  throw ConfigError("unknown volume_flux '" + std::string(name) + "' (expected central|ec)");
}

std::string_view to_string(VolumeFluxKind kind) {
  return kind == VolumeFluxKind::Central ? "central" : "ec";
}

MetricData cartesian_metric(double dx, double dy) {
  MetricData m;
  m.J = 0.25 * dx * dy;
  m.Ja1 = {0.5 * dy, 0.0, 0.0};
  m.Ja2 = {0.0, 0.5 * dx, 0.0};
  return m;
}

ConsState central_volume_flux(const ConsState& uL, const ConsState& uR, const Vec3& m,
                              const EquationParams& p) {
  return 0.5 * (advective_flux(uL, m, p) + advective_flux(uR, m, p));
}

namespace {

// Logarithmic mean with the series branch for nearly equal arguments.
double ln_mean(double x, double y) {
  const double f2 = (x * (x - 2.0 * y) + y * y) / (x * (x + 2.0 * y) + y * y);
  if (f2 < 1e-4) return (x + y) * 52.5 / (105.0 + f2 * (35.0 + f2 * (21.0 + f2 * 15.0)));
  return (y - x) / std::log(y / x);
}

double inv_ln_mean(double x, double y) {
  const double f2 = (x * (x - 2.0 * y) + y * y) / (x * (x + 2.0 * y) + y * y);
  if (f2 < 1e-4) return (105.0 + f2 * (35.0 + f2 * (21.0 + f2 * 15.0))) / (52.5 * (x + y));
  return std::log(y / x) / (y - x);
}

ConsState ec_flux_ordered(const ConsState& ul, const ConsState& ur, const Vec3& n,
                          const EquationParams& p) {
  const PrimState wl = cons_to_prim(ul, p);
  const PrimState wr = cons_to_prim(ur, p);

  const double vn_l = dot(wl.v, n);
  const double vn_r = dot(wr.v, n);
  const double Bn_l = dot(wl.B, n);
  const double Bn_r = dot(wr.B, n);

  const double rho_mean = ln_mean(wl.rho, wr.rho);
  // p_l p_r / ln_mean(rho_l p_r, rho_r p_l) == 1 / ln_mean(rho_l/p_l, rho_r/p_r)
  const double inv_rho_p_mean = wl.p * wr.p * inv_ln_mean(wl.rho * wr.p, wr.rho * wl.p);
  const Vec3 v_avg = average(wl.v, wr.v);
  const double p_avg = 0.5 * (wl.p + wr.p);
  const double psi_avg = 0.5 * (wl.psi + wr.psi);
  const double vel_sq_avg = 0.5 * dot(wl.v, wr.v);
  const double mag_sq_avg = 0.5 * dot(wl.B, wr.B);

  ConsState f;
  f[kRho] = rho_mean * 0.5 * (vn_l + vn_r);
  for (int k = 0; k < 3; ++k) {
    f[kMomX + k] = f[kRho] * v_avg[k] + (p_avg + mag_sq_avg) * n[k] -
                   0.5 * (Bn_l * wr.B[k] + Bn_r * wl.B[k]);
    f[kB1 + k] = p.c_h * psi_avg * n[k] +
                 0.5 * (vn_l * wl.B[k] - wl.v[k] * Bn_l + vn_r * wr.B[k] - wr.v[k] * Bn_r);
  }
  f[kPsi] = p.c_h * 0.5 * (Bn_l + Bn_r);

  double mag_terms = 0.0;
  for (int k = 0; k < 3; ++k) {
    mag_terms += vn_l * wl.B[k] * wr.B[k] + vn_r * wr.B[k] * wl.B[k];
    mag_terms -= wl.v[k] * Bn_l * wr.B[k] + wr.v[k] * Bn_r * wl.B[k];
  }
  f[kEnergy] = f[kRho] * (vel_sq_avg + inv_rho_p_mean / (p.gamma - 1.0)) +
               0.5 * (wl.p * vn_r + wr.p * vn_l + mag_terms +
                      p.c_h * (Bn_l * wr.psi + Bn_r * wl.psi));
  return f;
}

}  // namespace

bool volume_flux_available(VolumeFluxKind kind, const EquationParams& p) {
  return kind == VolumeFluxKind::Central || p.mu0 == 1.0;
}

std::optional<ConsState> ec_volume_flux(const ConsState& uL, const ConsState& uR, const Vec3& m,
                                        const EquationParams& p) {
  if (!volume_flux_available(VolumeFluxKind::EntropyConservative, p)) return std::nullopt;
  // Canonical argument order makes the result bitwise symmetric.
  if (uR.q < uL.q) return ec_flux_ordered(uR, uL, m, p);
  return ec_flux_ordered(uL, uR, m, p);
}

ConsState volume_flux(VolumeFluxKind kind, const ConsState& uL, const ConsState& uR,
                      const Vec3& m, const EquationParams& p) {
  if (kind == VolumeFluxKind::EntropyConservative) {
    if (auto f = ec_volume_flux(uL, uR, m, p)) return *f;
  }
  return central_volume_flux(uL, uR, m, p);
}

NonconsSplit powell_noncons_split(const ConsState& u_local, const Vec3& metric_avg,
                                  const Vec3& other_B, const EquationParams& p) {
  return {powell_phi(u_local, p), dot(average(u_local.magnetic(), other_B), metric_avg)};
}

NonconsSplit glm_noncons_split(const ConsState& u_local, const Vec3& metric_local,
                               double other_psi, const EquationParams& p) {
  return {glm_phi(u_local, metric_local, p), 0.5 * (u_local[kPsi] + other_psi)};
}

ConsState noncons_volume_term(const ConsState& uj, const ConsState& uk, const Vec3& metric_j,
                              const Vec3& metric_avg, const EquationParams& p) {
  const double b_avg = dot(average(uj.magnetic(), uk.magnetic()), metric_avg);
  const double psi_avg = 0.5 * (uj[kPsi] + uk[kPsi]);
  return b_avg * powell_phi(uj, p) + psi_avg * glm_phi(uj, metric_j, p);
}

ConsState rusanov_surface_flux(const ConsState& u_in, const ConsState& u_out, const Vec3& n,
                               const EquationParams& p) {
  const double n_mag = norm(n);
  const Vec3 n_unit = scaled(n, 1.0 / n_mag);
  const double lambda = max_wave_speed(u_in, u_out, n_unit, p);
  ConsState f = central_volume_flux(u_in, u_out, n, p);
  f -= (0.5 * lambda * n_mag) * (u_out - u_in);
  return f;
}

ConsState surface_noncons(const ConsState& u_in, const ConsState& u_out, const Vec3& metric_in,
                          const Vec3& metric_avg, const EquationParams& p) {
  const NonconsSplit powell = powell_noncons_split(u_in, metric_avg, u_out.magnetic(), p);
  const NonconsSplit glm = glm_noncons_split(u_in, metric_in, u_out[kPsi], p);
  return powell.assemble() + glm.assemble();
}

}  // namespace sbpmhd
