#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace sbpmhd {

using Vec3 = std::array<double, 3>;

inline constexpr int kNumVars = 9;

/// Slot layout of the GLM-MHD conserved state.
enum Var : int {
  kRho = 0,
  kMomX = 1,
  kMomY = 2,
  kMomZ = 3,
  kEnergy = 4,
  kB1 = 5,
  kB2 = 6,
  kB3 = 7,
  kPsi = 8,
};

/// Conserved GLM-MHD state (rho, rho v, rho E, B, psi). Also used for
/// fluxes and rates, which share the same 9-slot layout.
struct ConsState {
  std::array<double, kNumVars> q{};

  constexpr double& operator[](std::size_t i) { return q[i]; }
  constexpr double operator[](std::size_t i) const { return q[i]; }

  double rho() const { return q[kRho]; }
  Vec3 momentum() const { return {q[kMomX], q[kMomY], q[kMomZ]}; }
  double energy() const { return q[kEnergy]; }
  Vec3 magnetic() const { return {q[kB1], q[kB2], q[kB3]}; }
  double psi() const { return q[kPsi]; }

  ConsState& operator+=(const ConsState& o) {
    for (int k = 0; k < kNumVars; ++k) q[k] += o.q[k];
    return *this;
  }
  ConsState& operator-=(const ConsState& o) {
    for (int k = 0; k < kNumVars; ++k) q[k] -= o.q[k];
    return *this;
  }
  ConsState& operator*=(double s) {
    for (auto& v : q) v *= s;
    return *this;
  }

  friend ConsState operator+(ConsState a, const ConsState& b) { return a += b; }
  friend ConsState operator-(ConsState a, const ConsState& b) { return a -= b; }
  friend ConsState operator*(double s, ConsState a) { return a *= s; }
  friend ConsState operator*(ConsState a, double s) { return a *= s; }
  friend bool operator==(const ConsState&, const ConsState&) = default;
};

/// Primitive variables.
struct PrimState {
  double rho = 1.0;
  Vec3 v{0.0, 0.0, 0.0};
  double p = 1.0;
  Vec3 B{0.0, 0.0, 0.0};
  double psi = 0.0;
};

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 scaled(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

inline Vec3 average(const Vec3& a, const Vec3& b) {
  return {0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1]), 0.5 * (a[2] + b[2])};
}

inline double dot(const ConsState& a, const ConsState& b) {
  double s = 0.0;
  for (int k = 0; k < kNumVars; ++k) s += a.q[k] * b.q[k];
  return s;
}

inline double max_abs(const ConsState& u) {
  double m = 0.0;
  for (double v : u.q) m = std::fmax(m, std::fabs(v));
  return m;
}

inline bool all_finite(const ConsState& u) {
  for (double v : u.q)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace sbpmhd
