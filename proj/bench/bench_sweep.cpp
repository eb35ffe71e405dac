#include <benchmark/benchmark.h>

#include "tracesign/matrix.hpp"
#include "tracesign/sweep.hpp"

using namespace tracesign;

namespace {

void BM_ComputeF(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_F(k));
}

void BM_SweepReference(benchmark::State& state) {
  const MultilinearPoly p = trace_polynomial(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sign_sweep(p, {.jobs = 1, .backend = SweepBackend::Reference}));
}

void BM_SweepParallel(benchmark::State& state) {
  const MultilinearPoly p = trace_polynomial(static_cast<int>(state.range(0)));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sign_sweep(p, {.jobs = jobs}));
  state.counters["jobs"] = effective_jobs(jobs);
}

}  // namespace

BENCHMARK(BM_ComputeF)->DenseRange(2, 8, 2);
BENCHMARK(BM_SweepReference)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
// jobs = 0 means every available core.
BENCHMARK(BM_SweepParallel)
    ->ArgsProduct({{3, 4, 5, 6, 7}, {1, 0}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
