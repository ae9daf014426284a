#include <doctest.h>

#include <cmath>
#include <random>

#include "sbpmhd/benchmarks.hpp"
#include "sbpmhd/error.hpp"
#include "sbpmhd/random_fields.hpp"

using namespace sbpmhd;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("Orszag-Tang initial state") {
  const PrimState a = init_orszag_tang(0.25, 0.0);
  CHECK(a.rho == doctest::Approx(25.0 / (36.0 * kPi)).epsilon(1e-15));
  CHECK(a.p == doctest::Approx(5.0 / (12.0 * kPi)).epsilon(1e-15));
  CHECK(a.v[0] == doctest::Approx(0.0));
  CHECK(a.v[1] == doctest::Approx(1.0));
  CHECK(a.B[0] == doctest::Approx(0.0));
  CHECK(std::abs(a.B[1]) <= 1e-15);  // sin(pi)
  const PrimState o = init_orszag_tang(0.0, 0.0);
  CHECK(o.v[0] == 0.0);
  CHECK(o.v[1] == 0.0);
  const PrimState q = init_orszag_tang(0.125, 0.25);
  CHECK(q.v[0] == doctest::Approx(-1.0));
  CHECK(q.B[0] == doctest::Approx(-1.0 / std::sqrt(4.0 * kPi)));
  CHECK(q.B[1] == doctest::Approx(1.0 / std::sqrt(4.0 * kPi)));
  CHECK(q.psi == 0.0);
}

TEST_CASE("rotor initial state") {
  const PrimState c = init_rotor(0.5, 0.5);
  CHECK(c.rho == 10.0);
  CHECK(c.p == 1.0);
  CHECK(c.v[0] == 0.0);
  CHECK(c.B[0] == doctest::Approx(5.0 / (4.0 * kPi)));
  // solid-body rotation with speed 2 at r0
  const PrimState e = init_rotor(0.5 + 0.0999999, 0.5);
  CHECK(e.v[1] == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(e.rho == 10.0);
  // taper is continuous at both radii
  const PrimState t0 = init_rotor(0.5 + 0.1000001, 0.5);
  CHECK(t0.rho == doctest::Approx(10.0).epsilon(1e-4));
  CHECK(t0.v[1] == doctest::Approx(2.0).epsilon(1e-4));
  const PrimState t1 = init_rotor(0.5, 0.5 + 0.1149999);
  CHECK(t1.rho == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(std::abs(t1.v[0]) <= 1e-4);
  const PrimState out = init_rotor(0.9, 0.9);
  CHECK(out.rho == 1.0);
  CHECK(out.v[0] == 0.0);
  CHECK(out.v[1] == 0.0);
}

TEST_CASE("problem setup") {
  const ProblemSetup ot = make_problem("orszag_tang");
  CHECK(ot.t_end == 0.5);
  CHECK(ot.eq.gamma == doctest::Approx(5.0 / 3.0));
  const ProblemSetup r = make_problem("rotor");
  CHECK(r.t_end == 0.15);
  CHECK(r.Lx == 1.0);
  CHECK_THROWS_AS(make_problem("sod"), ConfigError);
  try {
    make_problem("sod");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("orszag_tang") != std::string::npos);
  }
}

TEST_CASE("scheme strings") {
  CHECK(SchemeSpec::parse("lgl:3").n_nodes() == 4);
  CHECK(SchemeSpec::parse("fdsbp:13").n_nodes() == 13);
  CHECK(SchemeSpec::parse("lgl:7").to_string() == "lgl:7");
  CHECK_THROWS_AS(SchemeSpec::parse("lgl"), ConfigError);
  CHECK_THROWS_AS(SchemeSpec::parse("fdsbp:5"), ConfigError);
  CHECK_THROWS_AS(SchemeSpec::parse("cheb:4"), ConfigError);
  CHECK_THROWS_AS(SchemeSpec::parse("lgl:x"), ConfigError);
}

TEST_CASE("run planning") {
  const RunPlan a = configure_run("orszag_tang", SchemeSpec::parse("lgl:3"), 1024);
  CHECK(a.elements_per_axis == 256);
  CHECK(a.dt == doctest::Approx(8e-5));
  const RunPlan b = configure_run("orszag_tang", SchemeSpec::parse("fdsbp:13"), 1027);
  CHECK(b.elements_per_axis == 79);
  const RunPlan c = configure_run("rotor", SchemeSpec::parse("lgl:3"), 128);
  CHECK(c.elements_per_axis == 32);
  CHECK(c.dt == doctest::Approx(6.4e-4));
  CHECK(c.mesh.num_elements() == 32 * 32);
  CHECK_THROWS_AS(configure_run("orszag_tang", SchemeSpec::parse("fdsbp:13"), 128), ConfigError);
  CHECK_THROWS_AS(configure_run("orszag_tang", SchemeSpec::parse("lgl:3"), 0), ConfigError);
}

TEST_CASE("initialized fields are admissible") {
  for (const char* name : {"orszag_tang", "rotor"}) {
    const RunPlan p = configure_run(name, SchemeSpec::parse("lgl:3"), 32);
    const SbpOperator1D op = p.scheme.build();
    const SolutionField f = initialize_field(p.mesh, op, p.problem.initial, p.problem.eq);
    for (const ConsState& u : f.values()) CHECK(is_admissible(u, p.problem.eq));
  }
}

TEST_CASE("random admissible states") {
  std::mt19937_64 rng(3);
  const EquationParams eq;
  RandomStateOptions opt;
  for (int k = 0; k < 1000; ++k) {
    const ConsState u = random_admissible_state(rng, eq, opt);
    REQUIRE(is_admissible(u, eq));
    const PrimState w = cons_to_prim(u, eq);
    CHECK(w.rho >= opt.rho_min);
    CHECK(w.rho <= opt.rho_max);
    CHECK(w.p >= opt.p_min * (1 - 1e-12));
    CHECK(w.p <= opt.p_max * (1 + 1e-12));
  }
  opt.magnetic = false;
  const ConsState u = random_admissible_state(rng, eq, opt);
  CHECK(u[kB1] == 0.0);
  CHECK(u[kPsi] == 0.0);
}
