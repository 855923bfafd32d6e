// Serial reference vs OpenMP kernels for the two exception scans.
// Arg(0) is the serial kernel; Arg(k > 0) is the parallel kernel with k workers.

#include <benchmark/benchmark.h>

#include "quivermod/kronecker.hpp"

namespace {

using quivermod::Execution;

void BM_KroneckerScan(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  const auto exec = threads == 0 ? Execution::serial : Execution::parallel;
  const quivermod::IntRange m{3, 8}, box{1, state.range(1)};
  for (auto _ : state) {
    auto r = quivermod::kronecker_criterion_exceptions(m, box, exec, threads);
    benchmark::DoNotOptimize(r.exceptions.data());
  }
  state.SetLabel(threads == 0 ? "serial" : "openmp");
}

void BM_LoopScan(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  const auto exec = threads == 0 ? Execution::serial : Execution::parallel;
  const quivermod::IntRange m{2, 8}, d{2, state.range(1)};
  for (auto _ : state) {
    auto r = quivermod::loop_criterion_exceptions(m, d, exec, threads);
    benchmark::DoNotOptimize(r.exceptions.data());
  }
  state.SetLabel(threads == 0 ? "serial" : "openmp");
}

}  // namespace

BENCHMARK(BM_KroneckerScan)->ArgsProduct({{0, 1, 2, 4}, {10, 16}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LoopScan)->ArgsProduct({{0, 1, 2, 4}, {12, 18}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
