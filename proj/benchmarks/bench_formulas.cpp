#include <benchmark/benchmark.h>

#include "otto/cycle.hpp"
#include "otto/engine.hpp"
#include "otto/fridge.hpp"

namespace {

void BM_HeatsWork(benchmark::State& state) {
  const otto::CycleSpec spec(otto::BathSpec(2.0), otto::BathSpec(0.2, 0.5),
                             otto::FrequencyPair(1.0, 2.0));
  for (auto _ : state) benchmark::DoNotOptimize(otto::heats_work(spec));
}
BENCHMARK(BM_HeatsWork);

void BM_EtaUp(benchmark::State& state) {
  double r = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(otto::engine::eta_up(0.2, r));
    r = r > 10.0 ? 0.0 : r + 1e-3;
  }
}
BENCHMARK(BM_EtaUp);

void BM_EfficiencyHighT(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(otto::engine::efficiency_ht(0.8, 0.5, 0.3));
}
BENCHMARK(BM_EfficiencyHighT);

void BM_ZetaUp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(otto::fridge::zeta_up(0.4, 0.5));
}
BENCHMARK(BM_ZetaUp);

}  // namespace
