#include "sbpmhd/random_fields.hpp"

namespace sbpmhd {

ConsState random_admissible_state(std::mt19937_64& rng, const EquationParams& eq,
                                  const RandomStateOptions& opt) {
  auto uni = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
  PrimState w;
  w.rho = uni(opt.rho_min, opt.rho_max);
  for (double& c : w.v) c = uni(-opt.v_max, opt.v_max);
  w.p = uni(opt.p_min, opt.p_max);
  if (opt.magnetic) {
    for (double& c : w.B) c = uni(-opt.B_max, opt.B_max);
    w.psi = uni(-opt.psi_max, opt.psi_max);
  }
  return prim_to_cons(w, eq);
}

SolutionField random_admissible_field(int num_elements, int n_nodes, std::mt19937_64& rng,
                                      const EquationParams& eq, const RandomStateOptions& opt) {
  SolutionField f(num_elements, n_nodes);
  for (ConsState& u : f.values()) u = random_admissible_state(rng, eq, opt);
  return f;
}

}  // namespace sbpmhd
