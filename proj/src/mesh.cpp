#include "sbpmhd/mesh.hpp"

#include <stdexcept>

namespace sbpmhd {

void Mesh2D::validate() const {
  if (nx < 1 || ny < 1) throw std::invalid_argument("mesh needs at least one element per axis");
  if (!(Lx > 0.0) || !(Ly > 0.0)) throw std::invalid_argument("mesh extents must be positive");
}

SolutionField lincomb(double a, const SolutionField& x, double b, const SolutionField& y) {
  if (!x.same_shape(y)) throw std::invalid_argument("lincomb: field shapes differ");
  SolutionField out(x.num_elements(), x.n_nodes());
  const std::size_t n = x.size();
#pragma omp parallel for schedule(static)
  for (std::size_t k = 0; k < n; ++k) out[k] = a * x[k] + b * y[k];
  return out;
}

double node_coordinate(const Mesh2D& mesh, const SbpOperator1D& op, int axis, int elem_along,
                       int node) {
  const double h = axis == 0 ? mesh.dx() : mesh.dy();
  const double origin = axis == 0 ? mesh.x0 : mesh.y0;
  return origin + h * elem_along + 0.5 * h * (op.nodes[node] + 1.0);
}

}  // namespace sbpmhd
