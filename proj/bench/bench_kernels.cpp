#include <benchmark/benchmark.h>

#include <random>

#include "hre/experiments.hpp"
#include "hre/pc_matrix.hpp"

namespace {

hre::Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? hre::Execution::serial : hre::Execution::parallel;
}

void BM_Koczkodaj(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const hre::PcMatrix m =
      hre::perturb_reciprocal(hre::gen_consistent(n, 9).matrix, 0.5, 10);
  for (auto _ : state) benchmark::DoNotOptimize(hre::koczkodaj_index(m, mode(state)));
  state.SetLabel(state.range(1) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_Koczkodaj)->ArgsProduct({{50, 200, 400}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
  hre::ExperimentConfig config;
  config.trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hre::run_experiment(config, mode(state)));
  state.SetLabel(state.range(1) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_Simulate)->ArgsProduct({{100, 1000}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
