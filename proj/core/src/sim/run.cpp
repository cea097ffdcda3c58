#include "levyhedge/sim/run.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "levyhedge/hedging/coefficients.hpp"
#include "levyhedge/hedging/delta.hpp"
#include "levyhedge/hedging/gram.hpp"
#include "levyhedge/market/asset.hpp"
#include "levyhedge/market/kernel.hpp"
#include "levyhedge/sim/stats.hpp"

namespace levyhedge::sim {

namespace {

levy::PathSeries price_path(const Scenario& s, const market::AssetSpec& asset, const levy::NoiseRealization& noise) {
  return s.price_scheme == PriceScheme::euler ? market::euler_price_path(asset, s.measure, noise, s.grid)
                                              : market::geometric_price_path(asset, s.measure, noise, s.grid);
}

PathSummary summarize(std::uint64_t index, const hedging::HedgeReport& report) {
  PathSummary p;
  p.path_index = index;
  p.terminal_deviation = report.portfolio.terminal() - report.portfolio.initial();
  for (double dv : report.residual_increments) {
    p.residual_sum += dv;
    p.residual_sum_sq += dv * dv;
  }
  p.max_abs_residual = report.max_abs_residual;
  return p;
}

}  // namespace

SimulatedPath simulate_path(const Scenario& s, std::uint64_t path_index) {
  SimulatedPath out;
  out.noise = levy::sample_noise(s.measure, s.grid, s.seed, path_index);
  out.contract = price_path(s, s.contract_asset(), out.noise);
  for (const auto& a : s.hedging_asset_specs()) out.assets.push_back(price_path(s, a, out.noise));
  return out;
}

std::vector<double> scenario_ratios(const Scenario& s) {
  s.validate();
  const auto contract = s.contract_asset();
  const auto assets = s.hedging_asset_specs();
  std::vector<double> ratios(assets.size(), 0.0);
  switch (s.hedge_mode.kind) {
    case HedgeKind::none: break;
    case HedgeKind::single: {
      const std::size_t i = s.hedge_mode.asset;
      ratios[i] = hedging::single_asset_hedge(1.0, 1.0, hedging::single_coefficients(contract, assets[i], s.measure));
      break;
    }
    case HedgeKind::two_asset: {
      const auto phi = hedging::two_asset_hedge(contract, assets[0], assets[1], {1.0, 1.0, 1.0}, s.measure);
      ratios[0] = phi[0];
      ratios[1] = phi[1];
      break;
    }
    case HedgeKind::multi: ratios = hedging::optimal_ratios(contract, assets, s.measure); break;
  }
  return ratios;
}

ScenarioAggregate aggregate_paths(const std::vector<PathSummary>& paths, std::size_t steps) {
  ScenarioAggregate agg;
  agg.paths = paths.size();
  agg.steps = steps;
  std::vector<double> squared;
  squared.reserve(paths.size());
  double sum = 0.0, sum_sq = 0.0;
  for (const auto& p : paths) {
    squared.push_back(p.terminal_deviation * p.terminal_deviation);
    sum += p.residual_sum;
    sum_sq += p.residual_sum_sq;
    agg.max_abs_residual = std::max(agg.max_abs_residual, p.max_abs_residual);
  }
  const auto stats = sample_stats(squared);
  agg.delta_mc = stats.mean;
  agg.delta_mc_stderr = stats.std_error;
  const double count = static_cast<double>(paths.size() * steps);
  if (count > 0.0) {
    const double mean = sum / count;
    agg.per_step_std = std::sqrt(std::max(0.0, sum_sq / count - mean * mean));
  }
  return agg;
}

ScenarioResult run_scenario(const Scenario& s) {
  s.validate();
  const auto contract = s.contract_asset();
  const auto assets = s.hedging_asset_specs();

  ScenarioResult result;
  result.name = s.name;
  result.ratios = scenario_ratios(s);
  result.delta_analytic = hedging::analytic_delta(contract, assets, result.ratios, s.measure, s.grid.horizon());
  if (s.hedge_mode.kind == HedgeKind::single)
    result.rho = hedging::rho_diagnostic(contract, assets[s.hedge_mode.asset], s.measure);

  const auto rule = hedging::constant_ratio_rule(result.ratios);
  auto hedge_path = [&](std::uint64_t index) {
    auto path = simulate_path(s, index);
    auto report = hedging::evolve_portfolio(path.contract, path.assets, rule, s.grid);
    return std::pair{std::move(path), std::move(report)};
  };

  result.paths.resize(s.n_paths);
  std::size_t threads = s.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : s.threads;
  threads = std::min(threads, s.n_paths);
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (std::size_t p = t; p < s.n_paths; p += threads) {
            const auto hedged = hedge_path(p);
            result.paths[p] = summarize(p, hedged.second);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  result.aggregate = aggregate_paths(result.paths, s.grid.steps());

  auto [path, report] = hedge_path(0);
  report.delta_analytic = result.delta_analytic;
  report.rho = result.rho;
  result.golden.path = std::move(path);
  result.golden.report = std::move(report);
  if (s.kernel) result.golden.kernel = market::kernel_path(*s.kernel, s.measure, result.golden.path.noise, s.grid);
  return result;
}

}  // namespace levyhedge::sim
