#pragma once

#include <cstdint>

#include "sbpmhd/benchmarks.hpp"
#include "sbpmhd/two_point_fluxes.hpp"

namespace sbpmhd {

struct EquivalenceReport {
  int trials = 0;
  double max_abs_deviation = 0.0;
  /// max over nodes and variables of |direct - fluxdiff| / (1 + |direct|)
  double max_scaled_deviation = 0.0;
};

/// Compares compute_rhs_direct with compute_rhs_fluxdiff (alpha = 0) on
/// random admissible fields over an elements x elements periodic mesh.
EquivalenceReport equivalence_suite(const SchemeSpec& scheme, std::uint64_t seed, int trials = 200,
                                    int elements = 4,
                                    VolumeFluxKind flux = VolumeFluxKind::Central);

}  // namespace sbpmhd
