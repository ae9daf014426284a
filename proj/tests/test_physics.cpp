#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sbpmhd/physics.hpp"
#include "sbpmhd/random_fields.hpp"

using namespace sbpmhd;

namespace {

constexpr double kPi = std::numbers::pi;

ConsState from_prim(double rho, Vec3 v, double p, Vec3 B = {0, 0, 0}, double psi = 0.0,
                    const EquationParams& eq = {}) {
  return prim_to_cons(PrimState{rho, v, p, B, psi}, eq);
}

// Compressible Euler flux along axis d, coded independently of the library.
std::array<double, 5> euler_flux(double rho, Vec3 v, double p, double gamma, int d) {
  const double E = p / (gamma - 1.0) + 0.5 * rho * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  std::array<double, 5> f{rho * v[d], rho * v[0] * v[d], rho * v[1] * v[d], rho * v[2] * v[d],
                          (E + p) * v[d]};
  f[1 + d] += p;
  return f;
}

// Block-wise Euler + MHD + GLM flux along axis d.
ConsState blockwise_flux(const ConsState& u, int d, const EquationParams& eq) {
  const PrimState w = cons_to_prim(u, eq);
  const double g = eq.gamma, mu = eq.mu0;
  ConsState euler, mhd, glm;
  euler[kRho] = w.rho * w.v[d];
  for (int k = 0; k < 3; ++k) euler[kMomX + k] = w.rho * w.v[k] * w.v[d] + (k == d ? w.p : 0.0);
  euler[kEnergy] = w.v[d] * (0.5 * w.rho * dot(w.v, w.v) + g * w.p / (g - 1.0));

  const double B2 = dot(w.B, w.B);
  for (int k = 0; k < 3; ++k) {
    mhd[kMomX + k] = (k == d ? 0.5 * B2 : 0.0) / mu - w.B[d] * w.B[k] / mu;
    mhd[kB1 + k] = w.v[d] * w.B[k] - w.B[d] * w.v[k];
  }
  mhd[kEnergy] = (w.v[d] * B2 - w.B[d] * dot(w.v, w.B)) / mu;

  glm[kEnergy] = eq.c_h * w.psi * w.B[d] / mu;
  glm[kB1 + d] = eq.c_h * w.psi;
  glm[kPsi] = eq.c_h * w.B[d];
  return euler + mhd + glm;
}

}  // namespace

TEST_CASE("pressure from the perfect-gas closure") {
  const EquationParams eq;
  ConsState u;
  u[kRho] = 1.0;
  u[kEnergy] = 1.5;
  CHECK(pressure(u, eq) == doctest::Approx(1.0).epsilon(1e-15));
  u[kMomX] = 1.0;
  u[kEnergy] = 2.0;
  CHECK(pressure(u, eq) == doctest::Approx(1.0).epsilon(1e-15));

  const ConsState ot = from_prim(25.0 / (36.0 * kPi), {0, 0, 0}, 5.0 / (12.0 * kPi));
  CHECK(std::abs(pressure(ot, eq) - 5.0 / (12.0 * kPi)) <= 1e-14);
}

TEST_CASE("pressure is not clamped") {
  const EquationParams eq;
  ConsState u;
  u[kRho] = 1.0;
  u[kEnergy] = -1.0;
  CHECK(pressure(u, eq) < 0.0);
  CHECK_FALSE(is_admissible(u, eq));
  u[kEnergy] = 1.0;
  u[kRho] = -1.0;
  CHECK_FALSE(is_admissible(u, eq));
}

TEST_CASE("conservative and primitive conversions") {
  const EquationParams eq;
  const ConsState rest = from_prim(1.0, {0, 0, 0}, 1.0);
  CHECK(rest[kEnergy] == doctest::Approx(1.0 / (eq.gamma - 1.0)).epsilon(1e-15));

  const double B1 = 5.0 / (4.0 * kPi);
  const ConsState rotor = from_prim(10.0, {0, 0, 0}, 1.0, {B1, 0, 0});
  CHECK(std::abs(rotor[kEnergy] - (1.5 + 0.5 * B1 * B1)) <= 1e-14);
  // with the disk spinning at unit speed, kinetic energy 1/2 * 10 * 1 = 5 appears
  const ConsState spinning = from_prim(10.0, {1, 0, 0}, 1.0, {B1, 0, 0});
  CHECK(std::abs(spinning[kEnergy] - (1.5 + 5.0 + 0.5 * B1 * B1)) <= 1e-14);

  std::mt19937_64 rng(42);
  double err = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const ConsState u = random_admissible_state(rng, eq);
    const ConsState back = prim_to_cons(cons_to_prim(u, eq), eq);
    for (int k = 0; k < kNumVars; ++k)
      err = std::max(err, std::abs(back[k] - u[k]) / std::max(1.0, std::abs(u[k])));
  }
  CHECK(err <= 1e-13);
}

TEST_CASE("advective flux") {
  EquationParams eq;
  const ConsState u = from_prim(2.0, {3, 0, 0}, 1.0);
  CHECK(advective_flux(u, 0, eq)[kRho] == doctest::Approx(6.0));

  eq.c_h = 1.0;
  const ConsState g = from_prim(1.0, {0, 0, 0}, 1.0, {0, 0, 0}, 1.0, eq);
  const ConsState fx = advective_flux(g, 0, eq);
  CHECK(fx[kB1] == doctest::Approx(1.0));
  CHECK(fx[kPsi] == 0.0);

  std::mt19937_64 rng(3);
  for (int n = 0; n < 200; ++n) {
    eq.c_h = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
    const ConsState r = random_admissible_state(rng, eq);
    for (int d = 0; d < 3; ++d) {
      const ConsState a = advective_flux(r, d, eq);
      const ConsState b = blockwise_flux(r, d, eq);
      for (int k = 0; k < kNumVars; ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-14 * (1 + std::abs(b[k])));
    }
  }
}

TEST_CASE("advective flux reduces to Euler without magnetic field") {
  const EquationParams eq;
  std::mt19937_64 rng(5);
  RandomStateOptions opt;
  opt.magnetic = false;
  for (int n = 0; n < 100; ++n) {
    const ConsState u = random_admissible_state(rng, eq, opt);
    const PrimState w = cons_to_prim(u, eq);
    for (int d = 0; d < 3; ++d) {
      const auto ref = euler_flux(w.rho, w.v, w.p, eq.gamma, d);
      const ConsState f = advective_flux(u, d, eq);
      for (int k = 0; k < 5; ++k) CHECK(std::abs(f[k] - ref[k]) <= 1e-14 * (1 + std::abs(ref[k])));
      for (int k = 5; k < kNumVars; ++k) CHECK(f[k] == 0.0);
    }
  }
}

TEST_CASE("Godunov-Powell vector") {
  const EquationParams eq;
  ConsState phi = powell_phi(from_prim(1.0, {1, 0, 0}, 1.0), eq);
  CHECK(phi[kB1] == 1.0);
  CHECK(phi[kB2] == 0.0);
  CHECK(phi[kMomX] == 0.0);
  CHECK(phi[kEnergy] == 0.0);

  phi = powell_phi(from_prim(1.0, {0, 0, 0}, 1.0, {0, 2, 0}), eq);
  CHECK(phi[kMomY] == 2.0);
  CHECK(phi[kB2] == 0.0);

  phi = powell_phi(from_prim(1.0, {1, 1, 1}, 1.0, {1, 1, 1}), eq);
  CHECK(phi[kEnergy] == doctest::Approx(3.0));

  // linear in v and B separately: doubling both quadruples the energy slot
  std::mt19937_64 rng(9);
  for (int n = 0; n < 50; ++n) {
    const ConsState u = random_admissible_state(rng, eq);
    PrimState w = cons_to_prim(u, eq);
    const ConsState a = powell_phi(u, eq);
    w.v = scaled(w.v, 2.0);
    w.B = scaled(w.B, 2.0);
    w.p = 10.0;
    const ConsState b = powell_phi(prim_to_cons(w, eq), eq);
    for (int k = 0; k < 3; ++k) {
      CHECK(b[kMomX + k] == doctest::Approx(2.0 * a[kMomX + k]));
      CHECK(b[kB1 + k] == doctest::Approx(2.0 * a[kB1 + k]));
    }
    CHECK(b[kEnergy] == doctest::Approx(4.0 * a[kEnergy]));
    CHECK(b[kRho] == 0.0);
    CHECK(b[kPsi] == 0.0);
  }
}

TEST_CASE("GLM non-conservative vector") {
  const EquationParams eq;
  ConsState phi = glm_phi(from_prim(1.0, {2, 0, 0}, 1.0, {0, 0, 0}, 3.0), 0, eq);
  CHECK(phi[kEnergy] == doctest::Approx(6.0));
  CHECK(phi[kPsi] == doctest::Approx(2.0));

  phi = glm_phi(from_prim(1.0, {0, 0.5, 0}, 1.0), 1, eq);
  CHECK(phi[kEnergy] == 0.0);
  CHECK(phi[kPsi] == doctest::Approx(0.5));

  phi = glm_phi(from_prim(1.0, {0, 0, 0}, 1.0, {1, 1, 1}, 4.0), 0, eq);
  for (int k = 0; k < kNumVars; ++k) CHECK(phi[k] == 0.0);
}

TEST_CASE("entropy functions") {
  const EquationParams eq;
  const ConsState u = from_prim(1.0, {0, 0, 0}, 1.0);
  CHECK(specific_entropy(u, eq) == doctest::Approx(0.0));
  CHECK(modified_entropy(u, eq) == doctest::Approx(1.5).epsilon(1e-15));

  std::mt19937_64 rng(11);
  for (int n = 0; n < 100; ++n) {
    PrimState w = cons_to_prim(random_admissible_state(rng, eq), eq);
    const double t0 = modified_entropy(prim_to_cons(w, eq), eq);
    w.p *= 1.0 + std::uniform_real_distribution<double>(1e-3, 1.0)(rng);
    CHECK(modified_entropy(prim_to_cons(w, eq), eq) > t0);
  }
}

TEST_CASE("entropy gradients match central differences") {
  const EquationParams eq;
  std::mt19937_64 rng(13);
  for (int n = 0; n < 20; ++n) {
    const ConsState u = random_admissible_state(rng, eq);
    const ConsState gt = modified_entropy_gradient(u, eq);
    const ConsState gs = entropy_variables(u, eq);
    for (int k = 0; k < kNumVars; ++k) {
      const double h = 1e-6 * std::max(1.0, std::abs(u[k]));
      ConsState up = u, um = u;
      up[k] += h;
      um[k] -= h;
      const double dt = (modified_entropy(up, eq) - modified_entropy(um, eq)) / (2 * h);
      const double ds = (entropy_density(up, eq) - entropy_density(um, eq)) / (2 * h);
      CHECK(gt[k] == doctest::Approx(dt).epsilon(1e-6).scale(1.0));
      CHECK(gs[k] == doctest::Approx(ds).epsilon(1e-6).scale(1.0));
    }
  }
}

TEST_CASE("wave speeds") {
  EquationParams eq;
  eq.c_h = 0.0;
  const ConsState still = from_prim(1.0, {0, 0, 0}, 1.0);
  CHECK(max_wave_speed(still, still, 0, eq) == doctest::Approx(std::sqrt(5.0 / 3.0)));
  CHECK(max_wave_speed(still, still, 0, eq) == doctest::Approx(1.29099).epsilon(1e-5));
  eq.c_h = 2.0;
  CHECK(max_wave_speed(still, still, 1, eq) == 2.0);

  std::mt19937_64 rng(17);
  eq.c_h = 1.0;
  for (int n = 0; n < 100; ++n) {
    const ConsState a = random_admissible_state(rng, eq);
    const ConsState b = random_admissible_state(rng, eq);
    CHECK(max_wave_speed(a, b, 0, eq) == max_wave_speed(b, a, 0, eq));
    CHECK(max_wave_speed(a, b, 1, eq) == max_wave_speed(b, a, 1, eq));
  }

  ConsState bad = still;
  bad[kEnergy] = -1.0;
  CHECK(std::isnan(max_wave_speed(bad, still, 0, eq)));
}
