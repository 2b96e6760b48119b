#include <benchmark/benchmark.h>

#include "effalg/canonical.hpp"
#include "effalg/catalog.hpp"
#include "effalg/enumerate.hpp"
#include "effalg/states.hpp"

using namespace effalg;

static void BM_Enumerate(benchmark::State& state) {
  EnumerationOptions o;
  o.count_only = true;
  o.jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(static_cast<int>(state.range(0)), o).count);
}
BENCHMARK(BM_Enumerate)->Args({6, 1})->Args({7, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

static void BM_CanonicalForm(benchmark::State& state) {
  const auto& t = find_entry(state.range(0) == 8 ? "E8" : "R9")->algebra.table();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(t));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(9)->Unit(benchmark::kMicrosecond);

static void BM_StateSpace(benchmark::State& state) {
  const auto a = make_sparse(0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(state_space(a));
}
BENCHMARK(BM_StateSpace)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

static void BM_StateSpaceE8(benchmark::State& state) {
  const auto& a = find_entry("E8")->algebra;
  for (auto _ : state) benchmark::DoNotOptimize(state_space(a));
}
BENCHMARK(BM_StateSpaceE8)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
