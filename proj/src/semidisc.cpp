#include "sbpmhd/semidisc.hpp"

#include <string>

#include "sbpmhd/error.hpp"

namespace sbpmhd {

LineContext line_context(const SpatialScheme& scheme, int e, int axis) {
  return LineContext{scheme.op, scheme.mesh.metric(e).contravariant(axis), scheme.eq,
                     scheme.volume_flux, scheme.nonconservative};
}

FaceTraces gather_interface_traces(const SolutionField& field, const Mesh2D& mesh) {
  if (!mesh.periodic_x || !mesh.periodic_y)
    throw UnsupportedFeature("only periodic boundaries are supported");

  const int n = field.n_nodes();
  const int K = field.num_elements();
  FaceTraces t;
  t.n_nodes = n;
  t.west.resize(static_cast<std::size_t>(K) * n);
  t.east.resize(t.west.size());
  t.south.resize(t.west.size());
  t.north.resize(t.west.size());

#pragma omp parallel for schedule(static)
  for (int e = 0; e < K; ++e) {
    const int ex = mesh.element_x(e);
    const int ey = mesh.element_y(e);
    const int west = mesh.element_index((ex + mesh.nx - 1) % mesh.nx, ey);
    const int east = mesh.element_index((ex + 1) % mesh.nx, ey);
    const int south = mesh.element_index(ex, (ey + mesh.ny - 1) % mesh.ny);
    const int north = mesh.element_index(ex, (ey + 1) % mesh.ny);
    for (int l = 0; l < n; ++l) {
      t.west[t.index(e, l)] = field.at(west, n - 1, l);
      t.east[t.index(e, l)] = field.at(east, 0, l);
      t.south[t.index(e, l)] = field.at(south, l, n - 1);
      t.north[t.index(e, l)] = field.at(north, l, 0);
    }
  }
  return t;
}

void require_admissible(const SolutionField& field, const EquationParams& eq) {
  const int n = field.n_nodes();
  for (int e = 0; e < field.num_elements(); ++e)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (!is_admissible(field.at(e, i, j), eq))
          throw NumericalError("inadmissible state at element " + std::to_string(e) + ", node (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")",
                               e, i, j);
}

ConsState boundary_gamma(const ConsState& u_node, const ConsState& u_outer, bool outer_is_left,
                         const LineContext& ctx) {
  ConsState g = outer_is_left ? rusanov_surface_flux(u_outer, u_node, ctx.metric, ctx.eq)
                              : rusanov_surface_flux(u_node, u_outer, ctx.metric, ctx.eq);
  if (ctx.nonconservative) g += surface_noncons(u_node, u_outer, ctx.metric, ctx.metric, ctx.eq);
  return g;
}

void direct_line_residual(std::span<const ConsState> line, const ConsState& outer_L,
                          const ConsState& outer_R, const LineContext& ctx,
                          std::span<ConsState> out) {
  const int n = static_cast<int>(line.size());
  const DenseMatrix& S = ctx.op.S;
  for (int j = 0; j < n; ++j) {
    ConsState r;
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      ConsState term = volume_flux(ctx.volume_flux, line[j], line[k], ctx.metric, ctx.eq);
      if (ctx.nonconservative)
        term += noncons_volume_term(line[j], line[k], ctx.metric, ctx.metric, ctx.eq);
      r -= S(j, k) * term;
    }
    if (j == 0) r += boundary_gamma(line[0], outer_L, true, ctx);
    if (j == n - 1) r -= boundary_gamma(line[n - 1], outer_R, false, ctx);
    out[j] = r;
  }
}

SolutionField compute_rhs_direct(const SolutionField& field, const SpatialScheme& scheme) {
  require_admissible(field, scheme.eq);
  const FaceTraces traces = gather_interface_traces(field, scheme.mesh);
  const int n = field.n_nodes();
  const auto& w = scheme.op.weights;
  SolutionField rate(field.num_elements(), n);

  std::vector<ConsState> line(n), res(n);
  for (int e = 0; e < field.num_elements(); ++e) {
    const double inv_J = 1.0 / scheme.mesh.metric(e).J;

    const LineContext cx = line_context(scheme, e, 0);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) line[i] = field.at(e, i, j);
      direct_line_residual(line, traces.west[traces.index(e, j)], traces.east[traces.index(e, j)],
                           cx, res);
      for (int i = 0; i < n; ++i) rate.at(e, i, j) += (1.0 / w[i]) * res[i];
    }

    const LineContext cy = line_context(scheme, e, 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) line[j] = field.at(e, i, j);
      direct_line_residual(line, traces.south[traces.index(e, i)],
                           traces.north[traces.index(e, i)], cy, res);
      for (int j = 0; j < n; ++j) rate.at(e, i, j) += (1.0 / w[j]) * res[j];
    }

    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) rate.at(e, i, j) *= inv_J;
  }
  return rate;
}

}  // namespace sbpmhd
