#include <benchmark/benchmark.h>

#include "rwg/cutoff.hpp"
#include "rwg/fourier.hpp"
#include "rwg/simulate.hpp"
#include "rwg/spectral.hpp"
#include "rwg/walks.hpp"

namespace {

using namespace rwg;

void BM_ConvolutionCurveCube(benchmark::State& state) {
  const WalkSpec spec{WalkName::kCubeNearestNeighbour, static_cast<int>(state.range(0)), 0};
  CurveOptions opts;
  opts.oracle_pair = false;
  for (auto _ : state) benchmark::DoNotOptimize(distance_curve(spec, 100, opts));
  state.SetComplexityN(1 << state.range(0));
}
BENCHMARK(BM_ConvolutionCurveCube)->DenseRange(6, 11, 1)->Unit(benchmark::kMillisecond);

void BM_ConvolutionCurveSymmetric(benchmark::State& state) {
  const WalkSpec spec{WalkName::kRandomTranspositions, static_cast<int>(state.range(0)), 0};
  CurveOptions opts;
  opts.oracle_pair = false;
  for (auto _ : state) benchmark::DoNotOptimize(distance_curve(spec, 30, opts));
}
BENCHMARK(BM_ConvolutionCurveSymmetric)->DenseRange(4, 7, 1)->Unit(benchmark::kMillisecond);

void BM_OraclePairing(benchmark::State& state) {
  const WalkSpec spec{WalkName::kCubeNearestNeighbour, static_cast<int>(state.range(0)), 0};
  for (auto _ : state) benchmark::DoNotOptimize(distance_curve(spec, 200));
}
BENCHMARK(BM_OraclePairing)->Arg(8)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_Spectrum(benchmark::State& state) {
  const auto op = StochasticOperator::from_measure(
      driving_measure(WalkSpec{WalkName::kHeisenbergGenerators, static_cast<int>(state.range(0)), 0}));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(op));
}
BENCHMARK(BM_Spectrum)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_UpperBoundLemma(benchmark::State& state) {
  const Measure nu = driving_measure(WalkSpec{WalkName::kCubeLoops, static_cast<int>(state.range(0)), 0});
  const IrrepCatalog cat = irrep_catalog(nu.group_ptr());
  for (auto _ : state) {
    const UpperBoundLemma ubl(nu, cat);
    for (std::size_t k = 0; k <= 200; ++k) benchmark::DoNotOptimize(ubl(k));
  }
}
BENCHMARK(BM_UpperBoundLemma)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RandomToTopSimulation(benchmark::State& state) {
  const SimulationOptions opts{1, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(random_to_top_sut(52, 20000, opts));
}
BENCHMARK(BM_RandomToTopSimulation)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CubeCoupling(benchmark::State& state) {
  const SimulationOptions opts{1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(cube_coupling(static_cast<int>(state.range(0)), 20000, opts));
}
BENCHMARK(BM_CubeCoupling)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
