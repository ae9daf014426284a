#include "sbpmhd/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sbpmhd/flux_diff.hpp"
#include "sbpmhd/random_fields.hpp"
#include "sbpmhd/semidisc.hpp"

namespace sbpmhd {

EquivalenceReport equivalence_suite(const SchemeSpec& scheme, std::uint64_t seed, int trials,
                                    int elements, VolumeFluxKind flux) {
  const EquationParams eq;
  Mesh2D mesh{elements, elements, 0.0, 0.0, 1.0, 1.0};
  const SpatialScheme s{scheme.build(), mesh, eq, flux, true};
  std::mt19937_64 rng(seed);
  EquivalenceReport rep;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const SolutionField u =
        random_admissible_field(mesh.num_elements(), s.op.n_nodes(), rng, eq);
    const SolutionField a = compute_rhs_direct(u, s);
    const SolutionField b = compute_rhs_fluxdiff(u, s);
    for (std::size_t k = 0; k < a.size(); ++k)
      for (int v = 0; v < kNumVars; ++v) {
        const double d = std::abs(a[k][v] - b[k][v]);
        rep.max_abs_deviation = std::max(rep.max_abs_deviation, d);
        rep.max_scaled_deviation =
            std::max(rep.max_scaled_deviation, d / (1.0 + std::abs(a[k][v])));
      }
  }
  return rep;
}

}  // namespace sbpmhd
