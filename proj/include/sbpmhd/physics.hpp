#pragma once

#include "sbpmhd/state.hpp"

namespace sbpmhd {

struct EquationParams {
  double gamma = 5.0 / 3.0;
  double mu0 = 1.0;
  double c_h = 1.0;  ///< hyperbolic divergence-cleaning speed
};

/// Gas pressure from the GLM calorically-perfect-gas closure. Not clamped:
/// a non-positive result signals an inadmissible state.
double pressure(const ConsState& u, const EquationParams& p);

/// rho > 0 and pressure > 0, both finite.
bool is_admissible(const ConsState& u, const EquationParams& p);

ConsState prim_to_cons(const PrimState& w, const EquationParams& p);
PrimState cons_to_prim(const ConsState& u, const EquationParams& p);

/// Column `dir` (0, 1, 2) of the advective flux: Euler + ideal MHD + GLM.
ConsState advective_flux(const ConsState& u, int dir, const EquationParams& p);

/// Advective flux contracted with a (metric) direction vector: sum_d f_d m_d.
ConsState advective_flux(const ConsState& u, const Vec3& m, const EquationParams& p);

/// Godunov-Powell vector (0, B/mu0, v.B/mu0, v, 0).
ConsState powell_phi(const ConsState& u, const EquationParams& p);

/// GLM non-conservative vector for direction `dir`:
/// (0, 0, 0, 0, v_dir psi, 0, 0, 0, v_dir) / mu0.
ConsState glm_phi(const ConsState& u, int dir, const EquationParams& p);

/// Sum over directions of glm_phi(u, d) * m_d.
ConsState glm_phi(const ConsState& u, const Vec3& m, const EquationParams& p);

/// s = ln(p rho^-gamma).
double specific_entropy(const ConsState& u, const EquationParams& p);

/// theta = e rho^(1-gamma), e = p / ((gamma-1) rho).
double modified_entropy(const ConsState& u, const EquationParams& p);

/// d theta / d u, used by the entropy line search.
ConsState modified_entropy_gradient(const ConsState& u, const EquationParams& p);

/// Mathematical entropy density -rho s / (gamma - 1).
double entropy_density(const ConsState& u, const EquationParams& p);

/// Entropy variables w = dS/du of the entropy density above.
ConsState entropy_variables(const ConsState& u, const EquationParams& p);

/// Fast magnetosonic speed along the unit direction n.
double fast_magnetosonic_speed(const ConsState& u, const Vec3& n_unit, const EquationParams& p);

/// Rusanov dissipation speed: max over both states of |v.n| + c_f, and c_h.
double max_wave_speed(const ConsState& uL, const ConsState& uR, int dir, const EquationParams& p);
double max_wave_speed(const ConsState& uL, const ConsState& uR, const Vec3& n_unit,
                      const EquationParams& p);

}  // namespace sbpmhd
