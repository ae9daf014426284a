#pragma once

#include <span>
#include <vector>

#include "sbpmhd/blend_field.hpp"
#include "sbpmhd/mesh.hpp"
#include "sbpmhd/semidisc.hpp"

namespace sbpmhd {

enum class FluxVariant { SBP, FV };

/// Staggered fluxes of one line of N+1 nodes:
/// gamma_left[j] = Gamma_(j,j-1), gamma_right[j] = Gamma_(j,j+1).
/// The nodal residual is m_j du_j/dt = gamma_left[j] - gamma_right[j].
struct StaggeredFluxSet {
  FluxVariant variant = FluxVariant::SBP;
  std::vector<ConsState> gamma_left;
  std::vector<ConsState> gamma_right;
};

/// Scratch buffers for the line kernels; reuse one per thread.
struct LineWorkspace {
  std::vector<ConsState> powell_loc, glm_loc, node_flux, row_flux;
  std::vector<double> row_powell, row_glm;
  void resize(int n);
};

/// High-order staggered fluxes from prefix sums of the volume terms. The
/// conservative prefix is shared by both sides of an interior interface;
/// only the local non-conservative factor differs.
void compute_staggered_sbp(std::span<const ConsState> line, const ConsState& outer_L,
                           const ConsState& outer_R, const LineContext& ctx,
                           std::span<ConsState> gamma_left, std::span<ConsState> gamma_right,
                           LineWorkspace& ws);

StaggeredFluxSet compute_staggered_sbp(std::span<const ConsState> line, const ConsState& outer_L,
                                       const ConsState& outer_R, const LineContext& ctx);

/// First-order subcell FV staggered fluxes: Rusanov between neighbouring nodes
/// plus the local x symmetric non-conservative terms. The element-face fluxes
/// are the same as in the high-order set.
void compute_staggered_fv(std::span<const ConsState> line, const ConsState& outer_L,
                          const ConsState& outer_R, const LineContext& ctx,
                          std::span<ConsState> gamma_left, std::span<ConsState> gamma_right);

StaggeredFluxSet compute_staggered_fv(std::span<const ConsState> line, const ConsState& outer_L,
                                      const ConsState& outer_R, const LineContext& ctx);

/// Blended nodal rates of one line: Gamma_(a,b) = (1-alpha) Gamma^SBP + alpha
/// Gamma^FV with alpha[k] on the interface between nodes k-1 and k, and
/// out[j] = (Gamma_(j,j-1) - Gamma_(j,j+1)) / (w_j J).
/// Throws std::invalid_argument if any alpha lies outside [0, 1].
void blended_rhs(const StaggeredFluxSet& sbp, const StaggeredFluxSet& fv,
                 std::span<const double> alpha, std::span<const double> weights, double J,
                 std::span<ConsState> out);

/// Staggered fluxes of every line of every element, both variants.
class StaggeredFluxField {
 public:
  StaggeredFluxField() = default;
  StaggeredFluxField(int num_elements, int n_nodes);

  int num_elements() const { return num_elements_; }
  int n_nodes() const { return n_; }

  /// Offset of the first node of (axis, element, line).
  std::size_t line_offset(int axis, int e, int line) const;

  std::span<ConsState> left(FluxVariant v, int axis, int e, int line);
  std::span<ConsState> right(FluxVariant v, int axis, int e, int line);
  std::span<const ConsState> left(FluxVariant v, int axis, int e, int line) const;
  std::span<const ConsState> right(FluxVariant v, int axis, int e, int line) const;

 private:
  std::vector<ConsState>& store(FluxVariant v, bool left_side);
  const std::vector<ConsState>& store(FluxVariant v, bool left_side) const;

  int num_elements_ = 0;
  int n_ = 0;
  std::vector<ConsState> sbp_left_, sbp_right_, fv_left_, fv_right_;
};

/// Evaluates both staggered flux sets on every line (OpenMP over elements).
StaggeredFluxField compute_staggered_field(const SolutionField& field,
                                           const SpatialScheme& scheme);

/// Assembles du/dt from stored staggered fluxes and interface alphas.
SolutionField blended_rate(const StaggeredFluxField& fluxes, const BlendField& blend,
                           const SpatialScheme& scheme);

/// Flux-differencing right-hand side with blending. With all alpha = 0 this
/// reproduces compute_rhs_direct.
SolutionField compute_rhs_fluxdiff(const SolutionField& field, const SpatialScheme& scheme,
                                   const BlendField& blend);

/// Convenience: alpha = 0 everywhere.
SolutionField compute_rhs_fluxdiff(const SolutionField& field, const SpatialScheme& scheme);

}  // namespace sbpmhd
