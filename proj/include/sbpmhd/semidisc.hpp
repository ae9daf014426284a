#pragma once

#include <span>
#include <vector>

#include "sbpmhd/mesh.hpp"
#include "sbpmhd/physics.hpp"
#include "sbpmhd/sbp_operator.hpp"
#include "sbpmhd/two_point_fluxes.hpp"

namespace sbpmhd {

/// Everything the spatial operator needs besides the solution itself.
struct SpatialScheme {
  SbpOperator1D op;
  Mesh2D mesh;
  EquationParams eq;
  VolumeFluxKind volume_flux = VolumeFluxKind::Central;
  /// Disables the Powell and GLM non-conservative terms (testing aid).
  bool nonconservative = true;
};

/// Per-line inputs shared by the direct and flux-differencing line kernels.
struct LineContext {
  const SbpOperator1D& op;
  Vec3 metric;  ///< J a^axis, constant along a Cartesian line
  const EquationParams& eq;
  VolumeFluxKind volume_flux = VolumeFluxKind::Central;
  bool nonconservative = true;
};

LineContext line_context(const SpatialScheme& scheme, int e, int axis);

/// Exterior traces per element face. Entry e * n + line of `west` is node
/// (n-1, line) of the west neighbour, `east` is node (0, line) of the east
/// neighbour; `south`/`north` likewise along y with line = i.
struct FaceTraces {
  int n_nodes = 0;
  std::vector<ConsState> west, east, south, north;

  std::size_t index(int e, int line) const { return static_cast<std::size_t>(e) * n_nodes + line; }
};

/// Read-only gather of neighbour traces. Periodic axes only; throws
/// UnsupportedFeature otherwise.
FaceTraces gather_interface_traces(const SolutionField& field, const Mesh2D& mesh);

/// Throws NumericalError naming the first element/node whose state is not
/// admissible.
void require_admissible(const SolutionField& field, const EquationParams& eq);

/// Direct split-form residual along one line:
/// out[j] = -sum_k S_jk (f*_(j,k) + Phi*_(j,k)) + d_j0 (f<>_(0,L) + Phi<>_(0,L))
///          - d_jN (f<>_(N,R) + Phi<>_(N,R)),
/// i.e. m_j du_j/dt before division by J.
void direct_line_residual(std::span<const ConsState> line, const ConsState& outer_L,
                          const ConsState& outer_R, const LineContext& ctx,
                          std::span<ConsState> out);

/// Element-boundary staggered flux seen from the node `u_node` whose neighbour
/// across the face is `u_outer`. `outer_is_left` selects the face orientation.
ConsState boundary_gamma(const ConsState& u_node, const ConsState& u_outer, bool outer_is_left,
                         const LineContext& ctx);

/// Serial reference right-hand side in the direct form, assembled with
/// tensor-product weights and divided by J w_i w_j.
SolutionField compute_rhs_direct(const SolutionField& field, const SpatialScheme& scheme);

}  // namespace sbpmhd
