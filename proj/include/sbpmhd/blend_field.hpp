#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace sbpmhd {

enum class BlendMode { ElementWise, SubcellWise };

BlendMode parse_blend_mode(std::string_view name);
std::string_view to_string(BlendMode mode);

/// Blending coefficients between the high-order SBP and the low-order FV
/// staggered fluxes. alpha = 1 selects the first-order FV scheme.
///
/// node_alpha uses the SolutionField layout. Interface arrays hold n+1 values
/// per element line: interface k sits between nodes k-1 and k, so k = 0 and
/// k = n are the element faces.
struct BlendField {
  int num_elements = 0;
  int n_nodes = 0;
  BlendMode mode = BlendMode::SubcellWise;
  std::vector<double> node_alpha;
  std::vector<double> alpha_x;  ///< per (element, line j, interface k along x)
  std::vector<double> alpha_y;  ///< per (element, line i, interface k along y)

  BlendField() = default;
  BlendField(int num_elements, int n_nodes, BlendMode mode, double value = 0.0);

  std::size_t node_index(int e, int i, int j) const {
    return (static_cast<std::size_t>(e) * n_nodes + j) * n_nodes + i;
  }
  std::size_t interface_index(int e, int line, int k) const {
    return (static_cast<std::size_t>(e) * n_nodes + line) * (n_nodes + 1) + k;
  }

  /// Sets every node and interface value.
  void fill(double value);
};

}  // namespace sbpmhd
