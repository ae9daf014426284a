#include <doctest.h>

#include <cmath>
#include <random>

#include "sbpmhd/error.hpp"
#include "sbpmhd/random_fields.hpp"
#include "sbpmhd/semidisc.hpp"

using namespace sbpmhd;

namespace {

SpatialScheme make_scheme(const SbpOperator1D& op, const Mesh2D& mesh,
                          VolumeFluxKind vf = VolumeFluxKind::Central) {
  return SpatialScheme{op, mesh, EquationParams{}, vf, true};
}

double total_mass_rate(const SolutionField& rate, const SpatialScheme& s) {
  double m = 0.0;
  const int n = rate.n_nodes();
  for (int e = 0; e < rate.num_elements(); ++e)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        m += s.mesh.metric(e).J * s.op.weights[i] * s.op.weights[j] * rate.at(e, i, j)[kRho];
  return m;
}

}  // namespace

TEST_CASE("interface traces on periodic meshes") {
  const int n = 3;
  auto tagged = [&](const Mesh2D& mesh) {
    SolutionField f(mesh.num_elements(), n);
    for (int e = 0; e < f.num_elements(); ++e)
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) f.at(e, i, j)[kRho] = 100 * e + 10 * i + j;
    return f;
  };

  Mesh2D two{2, 1};
  SolutionField f2 = tagged(two);
  FaceTraces t = gather_interface_traces(f2, two);
  for (int l = 0; l < n; ++l) {
    CHECK(t.west[t.index(0, l)] == f2.at(1, n - 1, l));
    CHECK(t.east[t.index(0, l)] == f2.at(1, 0, l));
    CHECK(t.south[t.index(0, l)] == f2.at(0, l, n - 1));
  }

  Mesh2D one{1, 1};
  SolutionField f1 = tagged(one);
  t = gather_interface_traces(f1, one);
  for (int l = 0; l < n; ++l) {
    CHECK(t.west[t.index(0, l)] == f1.at(0, n - 1, l));
    CHECK(t.east[t.index(0, l)] == f1.at(0, 0, l));
    CHECK(t.north[t.index(0, l)] == f1.at(0, l, 0));
  }

  // three eastward shifts around a ring return to the start
  Mesh2D ring{3, 1};
  SolutionField f3 = tagged(ring);
  t = gather_interface_traces(f3, ring);
  int e = 0;
  for (int step = 0; step < 3; ++step) {
    const double tag = t.east[t.index(e, 0)][kRho];
    e = static_cast<int>(tag) / 100;
  }
  CHECK(e == 0);

  Mesh2D wall{2, 2};
  wall.periodic_x = false;
  CHECK_THROWS_AS(gather_interface_traces(tagged(wall), wall), UnsupportedFeature);
}

TEST_CASE("free-stream preservation") {
  const EquationParams eq;
  const ConsState u = prim_to_cons(PrimState{1.3, {0.4, -0.7, 0.2}, 0.9, {0.5, 0.3, -0.2}, 0.1}, eq);
  for (const SbpOperator1D& op : {build_lgl_operator(3), build_fd_sbp_operator(13)}) {
    Mesh2D mesh{3, 2, 0.0, 0.0, 1.0, 0.7};
    const SpatialScheme s = make_scheme(op, mesh);
    SolutionField f(mesh.num_elements(), op.n_nodes());
    for (ConsState& x : f.values()) x = u;
    const SolutionField r = compute_rhs_direct(f, s);
    double worst = 0.0;
    for (const ConsState& x : r.values()) worst = std::max(worst, max_abs(x));
    CHECK(worst <= 1e-12 * (1.0 + max_abs(u)) / std::min(mesh.dx(), mesh.dy()));
  }
}

TEST_CASE("mass conservation of the direct residual") {
  const EquationParams eq;
  std::mt19937_64 rng(21);
  for (const SbpOperator1D& op : {build_lgl_operator(3), build_fd_sbp_operator(13)}) {
    Mesh2D mesh{3, 3};
    const SpatialScheme s = make_scheme(op, mesh);
    for (int trial = 0; trial < 5; ++trial) {
      const SolutionField f = random_admissible_field(mesh.num_elements(), op.n_nodes(), rng, eq);
      CHECK(std::abs(total_mass_rate(compute_rhs_direct(f, s), s)) <= 1e-12);
    }
  }
}

TEST_CASE("two-node element against hand assembly") {
  EquationParams eq;
  eq.c_h = 0.0;
  const SbpOperator1D op = build_lgl_operator(1);
  Mesh2D mesh{1, 1, 0.0, 0.0, 2.0, 0.5};
  const SpatialScheme s{op, mesh, eq, VolumeFluxKind::Central, true};

  const double rho[2] = {1.0, 1.4}, vx[2] = {0.3, -0.2}, p[2] = {1.0, 0.6};
  SolutionField f(1, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) f.at(0, i, j) = prim_to_cons(PrimState{rho[i], {vx[i], 0, 0}, p[i]}, eq);

  // 1D Euler flux and Rusanov flux along x, scaled by Ja1 = dy/2.
  auto flux = [&](int i) {
    const double E = p[i] / (eq.gamma - 1) + 0.5 * rho[i] * vx[i] * vx[i];
    return std::array<double, 3>{rho[i] * vx[i], rho[i] * vx[i] * vx[i] + p[i], (E + p[i]) * vx[i]};
  };
  auto cons = [&](int i) {
    return std::array<double, 3>{rho[i], rho[i] * vx[i],
                                 p[i] / (eq.gamma - 1) + 0.5 * rho[i] * vx[i] * vx[i]};
  };
  const double lam = std::max(std::abs(vx[0]) + std::sqrt(eq.gamma * p[0] / rho[0]),
                              std::abs(vx[1]) + std::sqrt(eq.gamma * p[1] / rho[1]));
  const double jac = mesh.dx() * mesh.dy() / 4.0, m = mesh.dy() / 2.0;
  const auto f0 = flux(0), f1 = flux(1), c0 = cons(0), c1 = cons(1);

  // S = [[0, 1], [-1, 0]]; the periodic neighbour of each node is the other one.
  // r0 = -S01 f*(u0,u1) + f<>(u1,u0),  r1 = -S10 f*(u1,u0) - f<>(u1,u0)
  const SolutionField r = compute_rhs_direct(f, s);
  const int slot[3] = {kRho, kMomX, kEnergy};
  for (int k = 0; k < 3; ++k) {
    const double central = 0.5 * (f0[k] + f1[k]) * m;
    const double rus = central - 0.5 * lam * m * (c0[k] - c1[k]);
    const double r0 = (-central + rus) / jac;
    const double r1 = (central - rus) / jac;
    for (int j = 0; j < 2; ++j) {
      CHECK(r.at(0, 0, j)[slot[k]] == doctest::Approx(r0).epsilon(1e-13).scale(1.0));
      CHECK(r.at(0, 1, j)[slot[k]] == doctest::Approx(r1).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("inadmissible states are reported with their location") {
  const EquationParams eq;
  const SbpOperator1D op = build_lgl_operator(2);
  Mesh2D mesh{2, 2};
  const SpatialScheme s = make_scheme(op, mesh);
  SolutionField f(4, 3);
  for (ConsState& x : f.values()) x = prim_to_cons(PrimState{}, eq);
  f.at(3, 1, 2)[kEnergy] = -1.0;
  try {
    compute_rhs_direct(f, s);
    FAIL("expected NumericalError");
  } catch (const NumericalError& err) {
    CHECK(err.element() == 3);
    CHECK(err.node_i() == 1);
    CHECK(err.node_j() == 2);
  }
}
