// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// fails. Pass criterion numbers as arguments to run a subset.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sbpmhd/driver.hpp"
#include "sbpmhd/flux_diff.hpp"
#include "sbpmhd/random_fields.hpp"
#include "sbpmhd/verification.hpp"

using namespace sbpmhd;

namespace {

// Pinned tolerances and budgets.
constexpr double kEquivTol = 1e-12;        // scaled by 1 + |RHS|
constexpr double kSbpTol = 1e-13;          // Q + Q^T - B
constexpr double kExactTol = 1e-11;        // polynomial exactness, scaled
constexpr double kSymmetryTol = 1e-14;     // hydro staggered fluxes
constexpr double kAsymmetryFloor = 1e-8;   // MHD staggered fluxes must differ by more
constexpr double kFreeStreamTol = 1e-12;
constexpr double kMassDriftTol = 1e-11;
constexpr double kIdpTol = 1e-9;
constexpr double kEntropyMonotoneTol = 1e-8;  // relative to |S|

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

RunConfig config(const std::string& problem, const std::string& scheme, int dof,
                 const std::string& limiter, const std::string& blend) {
  RunConfig c = make_run_config(
      {{"problem", problem}, {"scheme", scheme}, {"dof", std::to_string(dof)},
       {"limiter", limiter}, {"blend", blend}});
  c.write_files = false;
  return c;
}

double time_averaged_alpha(const RunResult& r) {
  double sum = 0.0;
  int n = 0;
  for (const auto& s : r.diagnostics)
    if (!std::isnan(s.mean_alpha)) {
      sum += s.mean_alpha;
      ++n;
    }
  return n > 0 ? sum / n : std::numeric_limits<double>::quiet_NaN();
}

/// Largest S(t_{k+1}) - S(t_k) relative to |S(t_k)|.
double max_relative_entropy_increase(const RunResult& r) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < r.diagnostics.size(); ++k) {
    const double a = r.diagnostics[k - 1].total_entropy, b = r.diagnostics[k].total_entropy;
    worst = std::max(worst, (b - a) / std::abs(a));
  }
  return worst;
}

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const char* s : {"lgl:3", "fdsbp:13"})
    worst = std::max(worst, equivalence_suite(SchemeSpec::parse(s), 0, 200, 4).max_scaled_deviation);
  const double secs = seconds_since(t0);
  return {worst <= kEquivTol && secs < 30.0,
          fmt("max |direct - fluxdiff|/(1+|rhs|) = %.2e", worst) + fmt(" (tol 1e-12), %.1f s", secs)};
}

Outcome criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  double sbp = 0.0, poly = 0.0, min_w = 1.0;
  auto check = [&](const SbpOperator1D& op, int want_all, int want_interior) {
    const ValidationReport r = verify_sbp(op);
    sbp = std::max(sbp, r.sbp_violation);
    poly = std::max({poly, r.polynomial_violation, r.interior_polynomial_violation});
    min_w = std::min(min_w, r.min_weight);
    ok = ok && r.sbp_violation <= kSbpTol && r.skew_violation == 0.0 && r.min_weight > 0.0 &&
         r.polynomial_violation <= kExactTol && r.interior_polynomial_violation <= kExactTol &&
         r.exact_degree >= want_all && r.interior_exact_degree >= want_interior;
  };
  for (int N = 1; N <= 12; ++N) check(build_lgl_operator(N), N, N);
  for (int n : {13, 14, 17, 25}) check(build_fd_sbp_operator(n), 2, 4);
  const double secs = seconds_since(t0);
  return {ok && secs < 5.0, fmt("max |Q+Q^T-B| = %.2e", sbp) + fmt(", exactness %.2e", poly) +
                                fmt(", min weight %.3g", min_w) + fmt(", %.2f s", secs)};
}

Outcome criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  const EquationParams eq;
  std::mt19937_64 rng(0);
  RandomStateOptions hydro;
  hydro.magnetic = false;
  double sym = 0.0, asym = 0.0;
  for (const SbpOperator1D& op : {build_lgl_operator(3), build_fd_sbp_operator(13)}) {
    const int n = op.n_nodes();
    const LineContext ctx{op, Vec3{0.6, -0.3, 0.0}, eq, VolumeFluxKind::Central, true};
    for (int trial = 0; trial < 100; ++trial) {
      for (const bool magnetic : {false, true}) {
        const RandomStateOptions opt = magnetic ? RandomStateOptions{} : hydro;
        std::vector<ConsState> line;
        for (int k = 0; k < n; ++k) line.push_back(random_admissible_state(rng, eq, opt));
        const ConsState L = random_admissible_state(rng, eq, opt);
        const ConsState R = random_admissible_state(rng, eq, opt);
        const StaggeredFluxSet g = compute_staggered_sbp(line, L, R, ctx);
        for (int j = 0; j + 1 < n; ++j) {
          const double d = max_abs(g.gamma_right[j] - g.gamma_left[j + 1]);
          if (magnetic) asym = std::max(asym, d);
          else sym = std::max(sym, d);
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  return {sym <= kSymmetryTol && asym > kAsymmetryFloor && secs < 5.0,
          fmt("hydro |G(j,j+1)-G(j+1,j)| = %.2e", sym) +
              fmt(", MHD max asymmetry %.3g", asym) + fmt(", %.2f s", secs)};
}

Outcome criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  const EquationParams eq;
  std::mt19937_64 rng(0);
  double fs = 0.0;
  for (const char* s : {"lgl:3", "fdsbp:13"}) {
    const SpatialScheme sc{SchemeSpec::parse(s).build(), Mesh2D{4, 4}, eq,
                           VolumeFluxKind::Central, true};
    for (int trial = 0; trial < 5; ++trial) {
      const ConsState u0 = random_admissible_state(rng, eq);
      SolutionField f(sc.mesh.num_elements(), sc.op.n_nodes());
      for (ConsState& u : f.values()) u = u0;
      for (const SolutionField& r : {compute_rhs_direct(f, sc), compute_rhs_fluxdiff(f, sc)})
        for (const ConsState& v : r.values()) fs = std::max(fs, max_abs(v));
    }
  }
  bool ok = fs <= kFreeStreamTol;
  double drift = 0.0;
  std::string failed;
  for (const char* lim : {"none", "fv", "loehner", "idp"}) {
    RunConfig c = config("orszag_tang", "lgl:3", 64, lim, "subcell");
    c.t_end = 100 * reference_dt(64);
    const RunResult r = run_simulation(c);
    if (!r.ok || r.steps != 100) failed += std::string(" ") + lim;
    drift = std::max(drift, r.max_relative_mass_drift);
  }
  const double secs = seconds_since(t0);
  ok = ok && failed.empty() && drift <= kMassDriftTol && secs < 120.0;
  return {ok, fmt("free stream |du/dt| = %.2e", fs) +
                  fmt(", mass drift over 100 steps %.2e (none/fv/loehner/idp)", drift) +
                  (failed.empty() ? "" : ", failed:" + failed) + fmt(", %.1f s", secs)};
}

Outcome criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig c = config("orszag_tang", "lgl:3", 64, "idp", "subcell");
  c.t_end = 0.1;
  const RunResult r = run_simulation(c);
  const double secs = seconds_since(t0);
  const bool ok = r.ok && r.max_density_violation <= kIdpTol &&
                  r.max_entropy_violation <= kIdpTol && secs < 300.0;
  return {ok, fmt("density violation %.2e", r.max_density_violation) +
                  fmt(", entropy violation %.2e", r.max_entropy_violation) +
                  " (tol 1e-9), fallback nodes " + std::to_string(r.idp_fallback_nodes) +
                  fmt(", %.1f s", secs)};
}

Outcome criterion6() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (const auto& [scheme, dof] : {std::pair{"lgl:3", 128}, std::pair{"fdsbp:13", 130}}) {
    double abar[2];
    int k = 0;
    for (const char* blend : {"subcell", "element"}) {
      const RunResult r = run_simulation(config("orszag_tang", scheme, dof, "loehner", blend));
      ok = ok && r.ok && r.min_rho > 0.0 && r.min_p > 0.0;
      abar[k++] = time_averaged_alpha(r);
      detail += std::string(scheme) + "/" + blend + fmt(" abar %.4f", abar[k - 1]) +
                fmt(" min p %.3g; ", r.min_p);
    }
    ok = ok && abar[1] > abar[0];
  }
  const double secs = seconds_since(t0);
  return {ok && secs < 1800.0, detail + fmt("%.0f s", secs)};
}

Outcome criterion7() {
  const auto t0 = std::chrono::steady_clock::now();
  const RunResult r = run_simulation(config("rotor", "lgl:3", 128, "loehner", "subcell"));
  const double inc = max_relative_entropy_increase(r);
  const double secs = seconds_since(t0);
  const bool ok = r.ok && r.min_rho > 0.0 && r.min_p > 0.0 && inc <= kEntropyMonotoneTol && secs < 900.0;
  return {ok, fmt("max relative S increase between samples %.2e", inc) +
                  fmt(" (tol 1e-8), min p %.3g", r.min_p) + fmt(", %.1f s", secs)};
}

Outcome criterion8() {
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig fv = config("orszag_tang", "lgl:3", 64, "fv", "subcell");
  RunConfig lo = config("orszag_tang", "lgl:3", 64, "loehner", "subcell");
  fv.t_end = lo.t_end = 0.2;
  const RunResult a = run_simulation(fv);
  const RunResult b = run_simulation(lo);
  const double inc = max_relative_entropy_increase(a);
  const auto drop = [](const RunResult& r) {
    return r.diagnostics.front().total_entropy - r.diagnostics.back().total_entropy;
  };
  const double secs = seconds_since(t0);
  const bool ok = a.ok && b.ok && inc < 0.0 && drop(a) > drop(b) && secs < 300.0;
  return {ok, fmt("FV S drop %.4g", drop(a)) + fmt(" vs Loehner %.4g", drop(b)) +
                  fmt(", max relative S change between samples %.2e", inc) + fmt(", %.1f s", secs)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"direct and flux-differencing residuals agree", criterion1},
      {"SBP structural suite", criterion2},
      {"staggered flux symmetry without magnetic terms", criterion3},
      {"free stream and mass conservation", criterion4},
      {"IDP bounds after correction", criterion5},
      {"Orszag-Tang robustness, element vs subcell limiting", criterion6},
      {"rotor entropy decay", criterion7},
      {"pure FV sanity", criterion8},
  };
  std::set<int> only;
  for (int k = 1; k < argc; ++k) only.insert(std::atoi(argv[k]));
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %d: %s: %s\n", o.pass ? "PASS" : "FAIL", id, criteria[k].first,
                o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
