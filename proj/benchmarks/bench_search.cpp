#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "otto/engine.hpp"
#include "otto/oracle.hpp"
#include "otto/precision.hpp"

namespace {

using namespace otto;

void BM_GoldenSectionDouble(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::maximize_scalar<double>(
        {[](double z) { return engine::work_ht(z, 0.5, 0.3, 1.0); }, 0.6, 1.0, 1e-12}));
  }
}
BENCHMARK(BM_GoldenSectionDouble);

void BM_GoldenSectionQuad(benchmark::State& state) {
  const Quad tau = 0.5;
  const Quad r = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::maximize_scalar<Quad>(
        {[&](Quad z) { return engine::work_ht(z, tau, r, Quad(1)); }, Quad(0.6), Quad(1),
         Quad(1e-22)}));
  }
}
BENCHMARK(BM_GoldenSectionQuad);

void BM_GridHighT(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<oracle::Axis> box{{0.01, 0.99, n}, {0.01, 0.99, n}, {0.0, 5.0, n}};
  const oracle::Objective eta = [](oracle::Point p) {
    return engine::efficiency_ht(p[0], p[1], p[2]);
  };
  const oracle::Predicate pwc = [](oracle::Point p) {
    return engine::pwc_ht(p[0], p[1], p[2]);
  };
  for (auto _ : state) benchmark::DoNotOptimize(oracle::sup_constrained_grid(eta, box, pwc));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * n * n * n));
}
BENCHMARK(BM_GridHighT)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_RandomHighT(benchmark::State& state) {
  const std::vector<oracle::Axis> box{{0.01, 0.99}, {0.01, 0.99}, {0.0, 5.0}};
  const oracle::Objective eta = [](oracle::Point p) {
    return engine::efficiency_ht(p[0], p[1], p[2]);
  };
  const oracle::Predicate pwc = [](oracle::Point p) {
    return engine::pwc_ht(p[0], p[1], p[2]);
  };
  for (auto _ : state) benchmark::DoNotOptimize(oracle::sup_random(eta, box, pwc, 100000, 1));
}
BENCHMARK(BM_RandomHighT)->Unit(benchmark::kMillisecond);

}  // namespace
