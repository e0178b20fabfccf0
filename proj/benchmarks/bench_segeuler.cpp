#include <benchmark/benchmark.h>

#include "segeuler/eulerbase.hpp"
#include "segeuler/genmultivar.hpp"
#include "segeuler/rootcert.hpp"

using namespace segeuler;

static void BM_StreamingAlpha(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(streaming_counts(n, {static_cast<int>(state.range(1))}));
}
BENCHMARK(BM_StreamingAlpha)->Args({7, 1})->Args({8, 1})->Args({8, 2})->Unit(benchmark::kMillisecond);

static void BM_ClosedAlpha(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_alpha(n));
}
BENCHMARK(BM_ClosedAlpha)->Arg(10)->Arg(20);

static void BM_BuildAlphaDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_alpha_direct(n));
}
BENCHMARK(BM_BuildAlphaDirect)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SturmChainP(benchmark::State& state) {
  const UniPoly p = closed_P(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SturmChain(p));
}
BENCHMARK(BM_SturmChainP)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_IsolateP(benchmark::State& state) {
  const UniPoly p = closed_P(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(isolate_roots(p));
}
BENCHMARK(BM_IsolateP)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_InterlacePair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const UniPoly f = closed_P(n);
  const UniPoly g = closed_P(n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(interlaces(g, f));
}
BENCHMARK(BM_InterlacePair)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
