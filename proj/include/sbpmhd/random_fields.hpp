#pragma once

#include <random>

#include "sbpmhd/mesh.hpp"
#include "sbpmhd/physics.hpp"

namespace sbpmhd {

struct RandomStateOptions {
  bool magnetic = true;  ///< false gives B = 0 and psi = 0
  double rho_min = 0.5, rho_max = 2.0;
  double p_min = 0.5, p_max = 2.0;
  double v_max = 1.0;
  double B_max = 1.0;
  double psi_max = 0.5;
};

/// Admissible state with primitive variables drawn uniformly from the
/// option ranges.
ConsState random_admissible_state(std::mt19937_64& rng, const EquationParams& eq,
                                  const RandomStateOptions& opt = {});

SolutionField random_admissible_field(int num_elements, int n_nodes, std::mt19937_64& rng,
                                      const EquationParams& eq,
                                      const RandomStateOptions& opt = {});

}  // namespace sbpmhd
