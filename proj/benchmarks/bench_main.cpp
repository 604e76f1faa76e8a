#include <benchmark/benchmark.h>

#include "ncsurf/assembly.hpp"
#include "ncsurf/asymptotics.hpp"
#include "ncsurf/oracle.hpp"
#include "ncsurf/schemes.hpp"
#include "ncsurf/trees.hpp"

using namespace ncsurf;

static void BM_TreeSeries(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_tree_gfs(order));
}
BENCHMARK(BM_TreeSeries)->Arg(50)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_BivariateTreeSeries(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_tree_gfs(order, true));
}
BENCHMARK(BM_BivariateTreeSeries)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_EnumerateSchemes(benchmark::State& state) {
  const char* names[] = {"cylinder", "torus1", "klein1", "orient:g=0,b=3"};
  const Surface s = parse_surface(names[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_schemes(s));
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_EnumerateSchemes)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_Assembly(benchmark::State& state) {
  const Surface s = parse_surface("klein1");
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(p_series(s, order));
}
BENCHMARK(BM_Assembly)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_CSigma(benchmark::State& state) {
  const Surface s = parse_surface("orient:g=0,b=3");
  for (auto _ : state) benchmark::DoNotOptimize(c_sigma(s));
}
BENCHMARK(BM_CSigma)->Unit(benchmark::kMillisecond);

static void BM_OracleDuals(benchmark::State& state) {
  const Surface s = parse_surface(state.range(0) == 0 ? "disk" : "cylinder");
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_duals(s, n));
}
BENCHMARK(BM_OracleDuals)->Args({0, 8})->Args({0, 10})->Args({1, 6})->Unit(benchmark::kMillisecond);

static void BM_TransferEstimate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(transfer_estimate(1, Rational(1, 2), Rational(1, 4), 1000));
}
BENCHMARK(BM_TransferEstimate);
BENCHMARK_MAIN();
