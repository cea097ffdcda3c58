#include <benchmark/benchmark.h>

#include <array>

#include "levyhedge/hedging/gram.hpp"
#include "levyhedge/levy/noise.hpp"
#include "levyhedge/market/asset.hpp"
#include "levyhedge/sim/brute_force.hpp"
#include "levyhedge/sim/run.hpp"

using namespace levyhedge;

static void BM_SampleNoise(benchmark::State& state) {
  const auto m = levy::LevyMeasure::bernoulli(15.0, 0.5, 1.0, -1.0);
  const levy::TimeGrid grid(1.0, static_cast<std::size_t>(state.range(0)));
  std::uint64_t path = 0;
  for (auto _ : state) benchmark::DoNotOptimize(levy::sample_noise(m, grid, 1, path++));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleNoise)->Arg(1000)->Arg(10000);

static void BM_GeometricPricePath(benchmark::State& state) {
  const auto m = levy::LevyMeasure::bernoulli(15.0, 0.5, 1.0, -1.0);
  const levy::TimeGrid grid(1.0, 1000);
  const auto noise = levy::sample_noise(m, grid, 1, 0);
  const auto asset = market::GeometricBernoulliSpec{100.0, 0.2, 0.3}.to_asset(m);
  for (auto _ : state) benchmark::DoNotOptimize(market::geometric_price_path(asset, m, noise, grid));
}
BENCHMARK(BM_GeometricPricePath);

static void BM_GramSolve(benchmark::State& state) {
  const auto m = levy::LevyMeasure::bernoulli(15.0, 0.5, 1.0, -1.0);
  const auto c = market::GeometricBernoulliSpec{100.0, 0.15, 0.25}.to_asset(m);
  const std::array<market::AssetSpec, 2> assets{market::GeometricBernoulliSpec{100.0, 0.2, 0.3}.to_asset(m),
                                                market::GeometricBernoulliSpec{100.0, 0.1, 0.2}.to_asset(m)};
  const std::array<double, 2> prices{100.0, 100.0};
  for (auto _ : state) {
    const auto sys = hedging::gram_system(c, assets, 100.0, prices, m);
    benchmark::DoNotOptimize(hedging::multi_asset_hedge(sys));
  }
}
BENCHMARK(BM_GramSolve);

static void BM_RunScenario(benchmark::State& state) {
  auto s = sim::builtin_scenario("fig3");
  s.n_paths = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sim::run_scenario(s).aggregate.delta_mc);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunScenario)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_BruteForce2D(benchmark::State& state) {
  const auto s = sim::builtin_scenario("fig3");
  for (auto _ : state) benchmark::DoNotOptimize(sim::brute_force_constant_hedge(s, {0.0, 1.0, 1e-3}).best_delta);
}
BENCHMARK(BM_BruteForce2D)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
