// Serial (threads = 1) against OpenMP runs of the Monte Carlo kernels, and
// the worklist stepper against the full-scan reference.

#include <benchmark/benchmark.h>

#include "tasep/dynamics.hpp"
#include "tasep/experiments.hpp"
#include "tasep/reference_laws.hpp"
#include "tasep/sampling.hpp"

using namespace tasep;

namespace {

ExperimentConfig excess_config(int threads) {
  ExperimentConfig c;
  c.init = InitialCondition{2000, Scaling::fixed, 0.5, 0.0};
  c.samples = 200;
  c.seed = 1;
  c.mode = Mode::predicate;
  c.threads = threads;
  return c;
}

void BM_Excess(benchmark::State& state) {
  const ExperimentConfig c = excess_config(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_excess_experiment(c).samples.data());
  state.SetItemsProcessed(state.iterations() * c.samples);
}
BENCHMARK(BM_Excess)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_Brownian(benchmark::State& state) {
  const int threads = int(state.range(0));
  for (auto _ : state) {
    const BrownianSample s =
        simulate_brownian_functional_unchecked(1.0, BrownianFunctional::argmax, 256, 4096, 3, threads);
    benchmark::DoNotOptimize(s.mean);
  }
  state.SetItemsProcessed(state.iterations() * 256 * 4096);
}
BENCHMARK(BM_Brownian)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_StabilizeWorklist(benchmark::State& state) {
  const TriString t = sample_three_with_scp(state.range(0), 0.5, 7).omega;
  for (auto _ : state) benchmark::DoNotOptimize(stabilize_three(t).steps);
}
BENCHMARK(BM_StabilizeWorklist)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_StabilizeFullScan(benchmark::State& state) {
  const TriString t = sample_three_with_scp(state.range(0), 0.5, 7).omega;
  for (auto _ : state) benchmark::DoNotOptimize(reference::stabilize_three(t).steps);
}
BENCHMARK(BM_StabilizeFullScan)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_TwoTypeTime(benchmark::State& state) {
  const BiString b = sample_two(state.range(0), 0.5, 9);
  for (auto _ : state) benchmark::DoNotOptimize(stabilization_time_two(b));
}
BENCHMARK(BM_TwoTypeTime)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
