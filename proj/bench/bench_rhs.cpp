// Serial direct residual vs. OpenMP flux-differencing residual on the same
// random field. Arguments: elements per axis.
#include <benchmark/benchmark.h>

#include <random>

#include "sbpmhd/benchmarks.hpp"
#include "sbpmhd/flux_diff.hpp"
#include "sbpmhd/limiting.hpp"
#include "sbpmhd/random_fields.hpp"

using namespace sbpmhd;

namespace {

struct Setup {
  SpatialScheme scheme;
  SolutionField field;
};

Setup make_setup(const char* scheme, int elements) {
  const EquationParams eq;
  Mesh2D mesh{elements, elements};
  SpatialScheme s{SchemeSpec::parse(scheme).build(), mesh, eq, VolumeFluxKind::Central, true};
  std::mt19937_64 rng(0);
  SolutionField f = random_admissible_field(mesh.num_elements(), s.op.n_nodes(), rng, eq);
  return {std::move(s), std::move(f)};
}

void report(benchmark::State& state, const Setup& s) {
  state.counters["nodes"] = static_cast<double>(s.field.size());
  state.SetItemsProcessed(state.iterations() * static_cast<long>(s.field.size()));
}

template <int Kind>
void BM_direct(benchmark::State& state) {
  const Setup s = make_setup(Kind == 0 ? "lgl:3" : "fdsbp:13", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_rhs_direct(s.field, s.scheme));
  report(state, s);
}

template <int Kind>
void BM_fluxdiff(benchmark::State& state) {
  const Setup s = make_setup(Kind == 0 ? "lgl:3" : "fdsbp:13", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_rhs_fluxdiff(s.field, s.scheme));
  report(state, s);
}

// Flux differencing with a Loehner subcell blending, as used in production runs.
void BM_fluxdiff_blended(benchmark::State& state) {
  const Setup s = make_setup("lgl:3", static_cast<int>(state.range(0)));
  const BlendField b = loehner_alpha(s.field, s.scheme, BlendMode::SubcellWise);
  for (auto _ : state) benchmark::DoNotOptimize(compute_rhs_fluxdiff(s.field, s.scheme, b));
  report(state, s);
}

}  // namespace

BENCHMARK(BM_direct<0>)->Name("direct_serial/lgl:3")->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fluxdiff<0>)->Name("fluxdiff_omp/lgl:3")->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_direct<1>)->Name("direct_serial/fdsbp:13")->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fluxdiff<1>)->Name("fluxdiff_omp/fdsbp:13")->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fluxdiff_blended)->Name("fluxdiff_omp_loehner/lgl:3")->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
