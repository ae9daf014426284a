#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sbpmhd/mesh.hpp"
#include "sbpmhd/physics.hpp"
#include "sbpmhd/sbp_operator.hpp"

namespace sbpmhd {

/// Operator choice written as "lgl:N" (polynomial degree) or "fdsbp:n" (nodes).
struct SchemeSpec {
  OperatorKind kind = OperatorKind::LGL;
  int param = 3;

  int n_nodes() const { return kind == OperatorKind::LGL ? param + 1 : param; }
  SbpOperator1D build() const;
  std::string to_string() const;
  /// Throws ConfigError on malformed input or unsupported sizes.
  static SchemeSpec parse(std::string_view text);
};

PrimState init_orszag_tang(double x, double y);
PrimState init_rotor(double x, double y);

/// Reference time step: 8e-5 at 1024 nodes per axis, scaled linearly with
/// the node spacing.
double reference_dt(int dof_per_axis);

struct ProblemSetup {
  std::string name;
  double x0 = 0.0, y0 = 0.0, Lx = 1.0, Ly = 1.0;
  std::function<PrimState(double, double)> initial;
  EquationParams eq;
  double t_end = 0.5;
};

std::vector<std::string> problem_names();

/// Throws ConfigError listing the valid problems for an unknown name.
ProblemSetup make_problem(std::string_view name);

struct RunPlan {
  ProblemSetup problem;
  SchemeSpec scheme;
  int dof_per_axis = 0;
  int elements_per_axis = 0;
  Mesh2D mesh;
  double dt = 0.0;
};

/// Mesh and time step for `dof_per_axis` nodes per axis. Throws ConfigError
/// when the node count is not a multiple of the nodes per element.
RunPlan configure_run(std::string_view name, const SchemeSpec& scheme, int dof_per_axis);

/// Nodal interpolation of a primitive-state initializer.
SolutionField initialize_field(const Mesh2D& mesh, const SbpOperator1D& op,
                               const std::function<PrimState(double, double)>& initial,
                               const EquationParams& eq);

}  // namespace sbpmhd
