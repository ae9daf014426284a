#include "sbpmhd/physics.hpp"

#include <algorithm>
#include <cmath>

namespace sbpmhd {

double pressure(const ConsState& u, const EquationParams& p) {
  const double rho = u[kRho];
  const Vec3 m = u.momentum();
  const Vec3 B = u.magnetic();
  const double kinetic = 0.5 * dot(m, m) / rho;
  const double magnetic = 0.5 * (dot(B, B) + u[kPsi] * u[kPsi]) / p.mu0;
  return (p.gamma - 1.0) * (u[kEnergy] - kinetic - magnetic);
}

bool is_admissible(const ConsState& u, const EquationParams& p) {
  if (!all_finite(u) || !(u[kRho] > 0.0)) return false;
  const double pr = pressure(u, p);
  return std::isfinite(pr) && pr > 0.0;
}

ConsState prim_to_cons(const PrimState& w, const EquationParams& p) {
  ConsState u;
  u[kRho] = w.rho;
  u[kMomX] = w.rho * w.v[0];
  u[kMomY] = w.rho * w.v[1];
  u[kMomZ] = w.rho * w.v[2];
  u[kEnergy] = w.p / (p.gamma - 1.0) + 0.5 * w.rho * dot(w.v, w.v) +
               0.5 * (dot(w.B, w.B) + w.psi * w.psi) / p.mu0;
  u[kB1] = w.B[0];
  u[kB2] = w.B[1];
  u[kB3] = w.B[2];
  u[kPsi] = w.psi;
  return u;
}

PrimState cons_to_prim(const ConsState& u, const EquationParams& p) {
  PrimState w;
  w.rho = u[kRho];
  w.v = {u[kMomX] / w.rho, u[kMomY] / w.rho, u[kMomZ] / w.rho};
  w.p = pressure(u, p);
  w.B = u.magnetic();
  w.psi = u[kPsi];
  return w;
}

ConsState advective_flux(const ConsState& u, int dir, const EquationParams& p) {
  const double rho = u[kRho];
  const Vec3 v{u[kMomX] / rho, u[kMomY] / rho, u[kMomZ] / rho};
  const Vec3 B = u.magnetic();
  const double psi = u[kPsi];
  const double pr = pressure(u, p);
  const double vd = v[dir];
  const double Bd = B[dir];
  const double B2 = dot(B, B);
  const double vB = dot(v, B);
  const double inv_mu0 = 1.0 / p.mu0;

  ConsState f;
  f[kRho] = rho * vd;
  for (int k = 0; k < 3; ++k) {
    f[kMomX + k] = rho * vd * v[k] - inv_mu0 * Bd * B[k];
    f[kB1 + k] = vd * B[k] - Bd * v[k];
  }
  f[kMomX + dir] += pr + 0.5 * inv_mu0 * B2;
  f[kB1 + dir] += p.c_h * psi;
  f[kEnergy] = vd * (0.5 * rho * dot(v, v) + p.gamma * pr / (p.gamma - 1.0)) +
               inv_mu0 * (vd * B2 - Bd * vB) + p.c_h * inv_mu0 * psi * Bd;
  f[kPsi] = p.c_h * Bd;
  return f;
}

ConsState advective_flux(const ConsState& u, const Vec3& m, const EquationParams& p) {
  ConsState f;
  for (int d = 0; d < 3; ++d)
    if (m[d] != 0.0) f += m[d] * advective_flux(u, d, p);
  return f;
}

ConsState powell_phi(const ConsState& u, const EquationParams& p) {
  const double rho = u[kRho];
  const Vec3 v{u[kMomX] / rho, u[kMomY] / rho, u[kMomZ] / rho};
  const Vec3 B = u.magnetic();
  const double inv_mu0 = 1.0 / p.mu0;
  ConsState phi;
  for (int k = 0; k < 3; ++k) {
    phi[kMomX + k] = inv_mu0 * B[k];
    phi[kB1 + k] = v[k];
  }
  phi[kEnergy] = inv_mu0 * dot(v, B);
  return phi;
}

ConsState glm_phi(const ConsState& u, int dir, const EquationParams& p) {
  const double vd = u[kMomX + dir] / u[kRho];
  ConsState phi;
  phi[kEnergy] = vd * u[kPsi] / p.mu0;
  phi[kPsi] = vd / p.mu0;
  return phi;
}

ConsState glm_phi(const ConsState& u, const Vec3& m, const EquationParams& p) {
  ConsState phi;
  for (int d = 0; d < 3; ++d)
    if (m[d] != 0.0) phi += m[d] * glm_phi(u, d, p);
  return phi;
}

double specific_entropy(const ConsState& u, const EquationParams& p) {
  return std::log(pressure(u, p) * std::pow(u[kRho], -p.gamma));
}

double modified_entropy(const ConsState& u, const EquationParams& p) {
  const double rho = u[kRho];
  const double e = pressure(u, p) / ((p.gamma - 1.0) * rho);
  return e * std::pow(rho, 1.0 - p.gamma);
}

ConsState modified_entropy_gradient(const ConsState& u, const EquationParams& p) {
  const double rho = u[kRho];
  const Vec3 v{u[kMomX] / rho, u[kMomY] / rho, u[kMomZ] / rho};
  const double rho_e = pressure(u, p) / (p.gamma - 1.0);
  const double rho_mg = std::pow(rho, -p.gamma);
  ConsState g;
  g[kRho] = rho_mg * (0.5 * dot(v, v) - p.gamma * rho_e / rho);
  for (int k = 0; k < 3; ++k) {
    g[kMomX + k] = -v[k] * rho_mg;
    g[kB1 + k] = -u[kB1 + k] / p.mu0 * rho_mg;
  }
  g[kEnergy] = rho_mg;
  g[kPsi] = -u[kPsi] / p.mu0 * rho_mg;
  return g;
}

double entropy_density(const ConsState& u, const EquationParams& p) {
  return -u[kRho] * specific_entropy(u, p) / (p.gamma - 1.0);
}

ConsState entropy_variables(const ConsState& u, const EquationParams& p) {
  const double rho = u[kRho];
  const Vec3 v{u[kMomX] / rho, u[kMomY] / rho, u[kMomZ] / rho};
  const double pr = pressure(u, p);
  const double s = std::log(pr * std::pow(rho, -p.gamma));
  const double beta = 0.5 * rho / pr;
  ConsState w;
  w[kRho] = (p.gamma - s) / (p.gamma - 1.0) - beta * dot(v, v);
  for (int k = 0; k < 3; ++k) {
    w[kMomX + k] = 2.0 * beta * v[k];
    w[kB1 + k] = 2.0 * beta * u[kB1 + k] / p.mu0;
  }
  w[kEnergy] = -2.0 * beta;
  w[kPsi] = 2.0 * beta * u[kPsi] / p.mu0;
  return w;
}

double fast_magnetosonic_speed(const ConsState& u, const Vec3& n_unit, const EquationParams& p) {
  const double rho = u[kRho];
  const Vec3 B = u.magnetic();
  const double a2 = p.gamma * pressure(u, p) / rho;
  const double b2 = dot(B, B) / (p.mu0 * rho);
  const double bn2 = dot(B, n_unit) * dot(B, n_unit) / (p.mu0 * rho);
  const double sum = a2 + b2;
  const double disc = std::fmax(sum * sum - 4.0 * a2 * bn2, 0.0);
  return std::sqrt(0.5 * (sum + std::sqrt(disc)));
}

double max_wave_speed(const ConsState& uL, const ConsState& uR, const Vec3& n_unit,
                      const EquationParams& p) {
  if (!is_admissible(uL, p) || !is_admissible(uR, p)) return NAN;
  const double lamL = std::fabs(dot(uL.momentum(), n_unit) / uL[kRho]) +
                      fast_magnetosonic_speed(uL, n_unit, p);
  const double lamR = std::fabs(dot(uR.momentum(), n_unit) / uR[kRho]) +
                      fast_magnetosonic_speed(uR, n_unit, p);
  return std::max({lamL, lamR, p.c_h});
}

double max_wave_speed(const ConsState& uL, const ConsState& uR, int dir, const EquationParams& p) {
  Vec3 n{0.0, 0.0, 0.0};
  n[dir] = 1.0;
  return max_wave_speed(uL, uR, n, p);
}

}  // namespace sbpmhd
