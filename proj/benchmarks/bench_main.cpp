#include "carrymix/bijections.hpp"
#include "carrymix/carries_chain.hpp"
#include "carrymix/matrix.hpp"
#include "carrymix/montecarlo.hpp"
#include "carrymix/mult_carries.hpp"
#include "carrymix/shuffling.hpp"

#include <benchmark/benchmark.h>

using namespace carrymix;

static void BM_BuildP(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(build_P({n, 10}));
}
BENCHMARK(BM_BuildP)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_CharPoly(benchmark::State& state) {
  const RationalMatrix p = build_P({state.range(0), 3});
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(p));
}
BENCHMARK(BM_CharPoly)->Arg(4)->Arg(8)->Arg(12);

static void BM_SeparationExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(separation_exact({state.range(0), 2}, 8));
}
BENCHMARK(BM_SeparationExact)->Arg(4)->Arg(8)->Arg(16);

static void BM_TotalPositivity(benchmark::State& state) {
  const RationalMatrix p = build_P({8, 2});
  for (auto _ : state) benchmark::DoNotOptimize(is_totally_positive(p, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_TotalPositivity)->DenseRange(2, 4);

static void BM_ExhaustiveShuffle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_shuffle_dist(state.range(0), 3));
}
BENCHMARK(BM_ExhaustiveShuffle)->DenseRange(3, 6);

static void BM_JointCarries(benchmark::State& state) {
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_joint_carries(4, 3, 3, jobs));
}
BENCHMARK(BM_JointCarries)->Arg(1)->Arg(4)->UseRealTime();

static void BM_TauTrace(benchmark::State& state) {
  Rng rng(1);
  const ColumnArray a = sample_columns(state.range(0), 8, 10, rng);
  for (auto _ : state) benchmark::DoNotOptimize(tau_trace(a));
}
BENCHMARK(BM_TauTrace)->Arg(8)->Arg(64)->Arg(512);

static void BM_SampleCarries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_joint_carries(5, 3, 2, 10000, 7, 1));
}
BENCHMARK(BM_SampleCarries);

static void BM_BuildK(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_K({state.range(0), 10}));
}
BENCHMARK(BM_BuildK)->Arg(7)->Arg(97)->Arg(997);

BENCHMARK_MAIN();
