// Serial reference vs OpenMP batch kernels on seeded random fibrations.
#include <benchmark/benchmark.h>

#include "lefschetz/batch.hpp"

using namespace lefschetz;

namespace {

const std::vector<PlanarFibration>& corpus(std::size_t count) {
  static std::vector<PlanarFibration> cached;
  if (cached.size() != count) cached = random_fibrations({2017, count, 6, 25});
  return cached;
}

void BM_EvaluateSerial(benchmark::State& state) {
  const auto& batch = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_serial(batch));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EvaluateParallel(benchmark::State& state) {
  const auto& batch = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_parallel(batch));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CheckSerial(benchmark::State& state) {
  const auto& batch = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_serial(batch));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CheckParallel(benchmark::State& state) {
  const auto& batch = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_parallel(batch));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_EvaluateSerial)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvaluateParallel)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CheckSerial)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CheckParallel)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
