#pragma once

#include <string_view>
#include <vector>

#include "sbpmhd/blend_field.hpp"
#include "sbpmhd/flux_diff.hpp"
#include "sbpmhd/mesh.hpp"
#include "sbpmhd/physics.hpp"
#include "sbpmhd/semidisc.hpp"

namespace sbpmhd {

enum class LimiterKind {
  None,     ///< pure high-order SBP (alpha = 0)
  FV,       ///< pure first-order subcell FV (alpha = 1)
  Loehner,  ///< a-priori feature indicator on rho * p
  IDP,      ///< a-posteriori density bounds + entropy minimum
};

LimiterKind parse_limiter(std::string_view name);
std::string_view to_string(LimiterKind kind);

/// One-sided Loehner ratio on a possibly irregular three-point stencil:
/// |dx- u+ - (dx- + dx+) u0 + dx+ u-| /
/// (dx- |u+ - u0| + dx+ |u0 - u-| + eps (dx- |u+| + (dx- + dx+) |u0| + dx+ |u-|)).
/// Returns 0 for a vanishing denominator.
double loehner_indicator(double u_minus, double u_center, double u_plus, double dx_minus,
                         double dx_plus, double eps);

/// Per-node a-priori alpha from rho * p, maximised over the two axes and
/// evaluated on element-interior nodes only (face nodes of an axis
/// contribute 0). Interfaces are filled according to `mode`.
BlendField loehner_alpha(const SolutionField& field, const SpatialScheme& scheme, BlendMode mode,
                         double eps = 0.2);

/// Fills the interface alphas (and, in element mode, the effective node
/// alphas) from the node alphas: element mode takes the element maximum,
/// subcell mode the maximum of the two adjacent nodes, across element faces
/// included.
void aggregate(BlendField& blend, const Mesh2D& mesh);

struct IdpBounds {
  std::vector<double> rho_min;
  std::vector<double> rho_max;
  std::vector<double> theta_min;
};

/// Local bounds from the low-order update over the stencil made of the node
/// and its immediate subcell neighbours along each axis (crossing element
/// faces).
IdpBounds idp_bounds(const SolutionField& u_fv, const Mesh2D& mesh, const EquationParams& eq);

struct AlphaResult {
  double alpha = 0.0;
  bool flagged = false;  ///< degenerate input or precondition/iteration failure
};

/// Smallest alpha moving rho_ho towards rho_fv into [rho_min, rho_max].
AlphaResult zalesak_density_alpha(double rho_ho, double rho_fv, double rho_min, double rho_max);

/// Smallest alpha in [0, 1] with theta((1-alpha) u_ho + alpha u_fv) >= theta_min,
/// by safeguarded Newton iteration; returns the upper bracket (safe side)
/// when the iteration budget runs out.
AlphaResult entropy_newton_alpha(const ConsState& u_ho, const ConsState& u_fv, double theta_min,
                                 const EquationParams& eq, double tol_alpha = 1e-12,
                                 int max_iter = 10);

struct IdpOptions {
  bool density = true;
  bool entropy = true;
  /// Enforce the entropy minimum only at nodes where the density bound was
  /// active this stage.
  bool entropy_only_where_density_limited = false;
  int max_passes = 3;
  double check_tol = 1e-11;
};

struct IdpStageReport {
  int passes = 0;
  long fallback_nodes = 0;
  long flagged_nodes = 0;
  long density_limited_nodes = 0;
  double max_density_violation = 0.0;  ///< after correction
  double max_entropy_violation = 0.0;  ///< after correction
};

struct IdpStageResult {
  SolutionField update;  ///< u + dt * L(u) with the corrected blending
  BlendField blend;
  IdpStageReport report;
};

/// A-posteriori limited forward-Euler update from precomputed staggered
/// fluxes. Raises node alphas in at most max_passes correction passes, then
/// forces alpha = 1 at any node still out of bounds until none remain.
IdpStageResult idp_limited_update(const SolutionField& u, double dt,
                                  const StaggeredFluxField& fluxes, const SpatialScheme& scheme,
                                  BlendMode mode, const IdpOptions& options);

}  // namespace sbpmhd
