#include <benchmark/benchmark.h>

#include "sl2swc/cohomology.hpp"
#include "sl2swc/oracle.hpp"
#include "sl2swc/swc.hpp"

using namespace sl2swc;

static void BM_GroupAndClasses(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto g = Group::sl2(q);
    benchmark::DoNotOptimize(g->classes().count());
  }
}
BENCHMARK(BM_GroupAndClasses)->Arg(5)->Arg(9)->Arg(16)->Arg(25)->Unit(benchmark::kMillisecond);

static void BM_CharTable(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    auto g = Group::sl2(q);
    g->classes();
    state.ResumeTiming();
    benchmark::DoNotOptimize(char_table(g)->size());
  }
}
BENCHMARK(BM_CharTable)->Arg(5)->Arg(9)->Arg(13)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Dickson(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dickson(r, (1 << r) - 1).product.is_zero());
}
BENCHMARK(BM_Dickson)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

static void BM_OddUnitPower(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(odd_unit_power(n, 256).is_zero());
}
BENCHMARK(BM_OddUnitPower)->Arg(3)->Arg(1023)->Arg(-77);

static void BM_EvenUnitPower(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(even_unit_power(r, 255, 64).is_zero());
}
BENCHMARK(BM_EvenUnitPower)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

static void BM_ExpandInV(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto c = even_unit_power(r, 255, 64);
  for (auto _ : state) benchmark::DoNotOptimize(expand_in_v(c, 64).is_zero());
}
BENCHMARK(BM_ExpandInV)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

static void BM_TheoremSuite(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const auto t = char_table(Group::sl2(q));
  SuiteOptions o;
  o.trials = 50;
  for (auto _ : state) benchmark::DoNotOptimize(suite_theorem(t, o).passes);
}
BENCHMARK(BM_TheoremSuite)->Arg(5)->Arg(7)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
