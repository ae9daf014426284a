#include "sbpmhd/benchmarks.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "sbpmhd/error.hpp"

namespace sbpmhd {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

SbpOperator1D SchemeSpec::build() const {
  return kind == OperatorKind::LGL ? build_lgl_operator(param) : build_fd_sbp_operator(param);
}

std::string SchemeSpec::to_string() const {
  return (kind == OperatorKind::LGL ? "lgl:" : "fdsbp:") + std::to_string(param);
}

SchemeSpec SchemeSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ConfigError("scheme must look like lgl:N or fdsbp:n, got '" + std::string(text) + "'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view num = text.substr(colon + 1);
  SchemeSpec s;
  if (kind == "lgl")
    s.kind = OperatorKind::LGL;
  else if (kind == "fdsbp")
    s.kind = OperatorKind::FDSBP;
  else
    throw ConfigError("unknown operator kind '" + std::string(kind) + "' (expected lgl|fdsbp)");
  const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), s.param);
  if (ec != std::errc() || ptr != num.data() + num.size())
    throw ConfigError("bad operator size in '" + std::string(text) + "'");
  if (s.kind == OperatorKind::LGL && s.param < 1)
    throw ConfigError("lgl degree must be at least 1");
  if (s.kind == OperatorKind::FDSBP && s.param < 13)
    throw ConfigError("fdsbp needs at least 13 nodes");
  return s;
}

PrimState init_orszag_tang(double x, double y) {
  PrimState w;
  w.rho = 25.0 / (36.0 * kPi);
  w.p = 5.0 / (12.0 * kPi);
  w.v = {-std::sin(2.0 * kPi * y), std::sin(2.0 * kPi * x), 0.0};
  const double s = 1.0 / std::sqrt(4.0 * kPi);
  w.B = {-std::sin(2.0 * kPi * y) * s, std::sin(4.0 * kPi * x) * s, 0.0};
  w.psi = 0.0;
  return w;
}

PrimState init_rotor(double x, double y) {
  constexpr double r0 = 0.1, r1 = 0.115, u0 = 2.0;
  const double dx = x - 0.5, dy = y - 0.5;
  const double r = std::sqrt(dx * dx + dy * dy);
  PrimState w;
  w.p = 1.0;
  w.B = {5.0 / (4.0 * kPi), 0.0, 0.0};
  if (r < r0) {
    w.rho = 10.0;
    w.v = {u0 / r0 * (0.5 - y), u0 / r0 * (x - 0.5), 0.0};
  } else if (r < r1) {
    const double f = (r1 - r) / (r1 - r0);
    w.rho = 1.0 + 9.0 * f;
    w.v = {f * u0 / r0 * (0.5 - y), f * u0 / r0 * (x - 0.5), 0.0};
  } else {
    w.rho = 1.0;
    w.v = {0.0, 0.0, 0.0};
  }
  return w;
}

double reference_dt(int dof_per_axis) { return 8e-5 * 1024.0 / dof_per_axis; }

std::vector<std::string> problem_names() { return {"orszag_tang", "rotor"}; }

ProblemSetup make_problem(std::string_view name) {
  ProblemSetup p;
  p.name = std::string(name);
  if (name == "orszag_tang") {
    p.initial = init_orszag_tang;
    p.t_end = 0.5;
  } else if (name == "rotor") {
    p.initial = init_rotor;
    p.t_end = 0.15;
  } else {
    std::string msg = "unknown problem '" + std::string(name) + "'; valid problems:";
    for (const auto& n : problem_names()) msg += " " + n;
    throw ConfigError(msg);
  }
  p.eq = EquationParams{5.0 / 3.0, 1.0, 1.0};
  return p;
}

RunPlan configure_run(std::string_view name, const SchemeSpec& scheme, int dof_per_axis) {
  RunPlan plan;
  plan.problem = make_problem(name);
  plan.scheme = scheme;
  const int n = scheme.n_nodes();
  if (dof_per_axis < n || dof_per_axis % n != 0)
    throw ConfigError(std::to_string(dof_per_axis) + " nodes per axis is not a multiple of the " +
                      std::to_string(n) + " nodes per element of " + scheme.to_string());
  plan.dof_per_axis = dof_per_axis;
  plan.elements_per_axis = dof_per_axis / n;
  plan.mesh = Mesh2D{plan.elements_per_axis, plan.elements_per_axis, plan.problem.x0,
                     plan.problem.y0,        plan.problem.Lx,         plan.problem.Ly,
                     true,                   true};
  plan.dt = reference_dt(dof_per_axis);
  return plan;
}

SolutionField initialize_field(const Mesh2D& mesh, const SbpOperator1D& op,
                               const std::function<PrimState(double, double)>& initial,
                               const EquationParams& eq) {
  const int n = op.n_nodes();
  SolutionField f(mesh.num_elements(), n);
  for (int e = 0; e < mesh.num_elements(); ++e) {
    const int ex = mesh.element_x(e), ey = mesh.element_y(e);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const double x = node_coordinate(mesh, op, 0, ex, i);
        const double y = node_coordinate(mesh, op, 1, ey, j);
        f.at(e, i, j) = prim_to_cons(initial(x, y), eq);
      }
  }
  return f;
}

}  // namespace sbpmhd
