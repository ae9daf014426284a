#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sbpmhd/sbp_operator.hpp"
#include "sbpmhd/state.hpp"
#include "sbpmhd/two_point_fluxes.hpp"

namespace sbpmhd {

/// Uniform Cartesian mesh of nx-by-ny elements on [x0, x0+Lx] x [y0, y0+Ly].
struct Mesh2D {
  int nx = 1;
  int ny = 1;
  double x0 = 0.0;
  double y0 = 0.0;
  double Lx = 1.0;
  double Ly = 1.0;
  bool periodic_x = true;
  bool periodic_y = true;

  double dx() const { return Lx / nx; }
  double dy() const { return Ly / ny; }
  int num_elements() const { return nx * ny; }
  int element_index(int ex, int ey) const { return ey * nx + ex; }
  int element_x(int e) const { return e % nx; }
  int element_y(int e) const { return e / nx; }
  MetricData metric(int /*e*/) const { return cartesian_metric(dx(), dy()); }
  double area() const { return Lx * Ly; }

  /// Throws std::invalid_argument on non-positive sizes or counts.
  void validate() const;
};

/// Nodal values of every element on the tensor-product SBP nodes. Node (i, j)
/// of element e lives at data[(e * n + j) * n + i]; i runs along x.
class SolutionField {
 public:
  SolutionField() = default;
  SolutionField(int num_elements, int n_nodes)
      : num_elements_(num_elements), n_(n_nodes),
        data_(static_cast<std::size_t>(num_elements) * n_nodes * n_nodes) {}

  int num_elements() const { return num_elements_; }
  int n_nodes() const { return n_; }
  std::size_t size() const { return data_.size(); }

  std::size_t index(int e, int i, int j) const {
    return (static_cast<std::size_t>(e) * n_ + j) * n_ + i;
  }
  ConsState& at(int e, int i, int j) { return data_[index(e, i, j)]; }
  const ConsState& at(int e, int i, int j) const { return data_[index(e, i, j)]; }

  ConsState& operator[](std::size_t k) { return data_[k]; }
  const ConsState& operator[](std::size_t k) const { return data_[k]; }

  std::span<ConsState> values() { return data_; }
  std::span<const ConsState> values() const { return data_; }

  bool same_shape(const SolutionField& o) const {
    return num_elements_ == o.num_elements_ && n_ == o.n_;
  }

 private:
  int num_elements_ = 0;
  int n_ = 0;
  std::vector<ConsState> data_;
};

/// a * x + b * y, node by node.
SolutionField lincomb(double a, const SolutionField& x, double b, const SolutionField& y);

/// Physical coordinate of node i of element index ex along x (or y).
double node_coordinate(const Mesh2D& mesh, const SbpOperator1D& op, int axis, int elem_along,
                       int node);

}  // namespace sbpmhd
