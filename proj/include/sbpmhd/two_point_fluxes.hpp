#pragma once

#include <optional>
#include <string_view>

#include "sbpmhd/physics.hpp"
#include "sbpmhd/state.hpp"

namespace sbpmhd {

enum class VolumeFluxKind { Central, EntropyConservative };

VolumeFluxKind parse_volume_flux(std::string_view name);
std::string_view to_string(VolumeFluxKind kind);

/// Constant per-element metric data of a Cartesian element (2D, z inert).
struct MetricData {
  double J = 1.0;
  Vec3 Ja1{1.0, 0.0, 0.0};
  Vec3 Ja2{0.0, 1.0, 0.0};

  const Vec3& contravariant(int axis) const { return axis == 0 ? Ja1 : Ja2; }
};

/// Metric data of a dx-by-dy Cartesian element mapped from [-1, 1]^2.
MetricData cartesian_metric(double dx, double dy);

/// Local x symmetric factorization of a non-conservative two-point term:
/// Phi*_(j,k) = loc_j * sym_(j,k) with sym_(j,k) = sym_(k,j).
struct NonconsSplit {
  ConsState loc;
  double sym = 0.0;

  ConsState assemble() const { return sym * loc; }
};

/// Central two-point flux 1/2 (f(uL) + f(uR)) . m.
ConsState central_volume_flux(const ConsState& uL, const ConsState& uR, const Vec3& m,
                              const EquationParams& p);

/// Entropy-conserving two-point flux for ideal GLM-MHD with the Powell term.
/// Returns nullopt when unavailable for the given parameters (mu0 != 1).
std::optional<ConsState> ec_volume_flux(const ConsState& uL, const ConsState& uR, const Vec3& m,
                                        const EquationParams& p);

/// Dispatches on kind; an unavailable EC flux falls back to central.
ConsState volume_flux(VolumeFluxKind kind, const ConsState& uL, const ConsState& uR,
                      const Vec3& m, const EquationParams& p);

/// True when `kind` can be evaluated for these parameters.
bool volume_flux_available(VolumeFluxKind kind, const EquationParams& p);

/// Powell term: loc = phi_MHD(u_local), sym = avg(B) . metric_avg.
NonconsSplit powell_noncons_split(const ConsState& u_local, const Vec3& metric_avg,
                                  const Vec3& other_B, const EquationParams& p);

/// GLM term: loc = phi_GLM(u_local) . metric_local, sym = avg(psi).
NonconsSplit glm_noncons_split(const ConsState& u_local, const Vec3& metric_local,
                               double other_psi, const EquationParams& p);

/// Powell + GLM volume term Phi*_(j,k), assembled directly from the
/// two-point formulas (no split objects).
ConsState noncons_volume_term(const ConsState& uj, const ConsState& uk, const Vec3& metric_j,
                              const Vec3& metric_avg, const EquationParams& p);

/// Rusanov flux through a face with (unnormalized) normal metric n, oriented
/// from u_in to u_out.
ConsState rusanov_surface_flux(const ConsState& u_in, const ConsState& u_out, const Vec3& n,
                               const EquationParams& p);

/// Surface non-conservative term seen from u_in, using the exterior trace
/// u_out as the second argument of the volume factorizations.
ConsState surface_noncons(const ConsState& u_in, const ConsState& u_out, const Vec3& metric_in,
                          const Vec3& metric_avg, const EquationParams& p);

}  // namespace sbpmhd
