#include <benchmark/benchmark.h>

#include "lgr/oracles.hpp"
#include "lgr/restriction.hpp"

namespace {

void BM_TableSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto theory = state.range(1) ? lgr::Theory::K : lgr::Theory::H;
  for (auto _ : state) benchmark::DoNotOptimize(lgr::restriction_table_serial(n, theory));
}

void BM_TableParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto theory = state.range(1) ? lgr::Theory::K : lgr::Theory::H;
  for (auto _ : state) benchmark::DoNotOptimize(lgr::restriction_table(n, theory));
}

void BM_GkmCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto table = lgr::restriction_table(n, lgr::Theory::K);
  const auto edges = lgr::gkm_edges(n);
  for (auto _ : state) benchmark::DoNotOptimize(lgr::gkm_check(table, edges));
}

}  // namespace

BENCHMARK(BM_TableSerial)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GkmCheck)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
