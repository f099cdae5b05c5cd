// Serial reference sweep against the OpenMP sweep on the same grid.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "qlcm/verifier.hpp"

namespace {

qlcm::SweepGrid bench_grid(std::int64_t n_max) {
  qlcm::SweepGrid grid;
  grid.q = {1, 4};
  grid.r = {1, 4};
  grid.u0 = {0, 4};
  grid.n_max = n_max;
  return grid;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto grid = bench_grid(state.range(0));
  qlcm::SweepOptions options;
  for (auto _ : state) {
    auto result = qlcm::run_sweep_serial(grid, options);
    benchmark::DoNotOptimize(result.records.data());
  }
}

void BM_SweepParallel(benchmark::State& state) {
  const auto grid = bench_grid(state.range(0));
  qlcm::SweepOptions options;
  options.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto result = qlcm::run_sweep(grid, options);
    benchmark::DoNotOptimize(result.records.data());
  }
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)
    ->ArgsProduct({{10, 15}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
