#include "levyhedge/hedging/portfolio.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "levyhedge/errors.hpp"

namespace levyhedge::hedging {

HedgeRule constant_ratio_rule(std::vector<double> ratios) {
  return [ratios = std::move(ratios)](std::size_t, double contract_left, std::span<const double> assets_left,
                                      std::span<double> phi) {
    for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = ratios[i] * contract_left / assets_left[i];
  };
}

HedgeRule fixed_holdings_rule(std::vector<double> phi, std::size_t assets) {
  return [phi = std::move(phi), assets](std::size_t step, double, std::span<const double>, std::span<double> out) {
    if ((step + 1) * assets > phi.size()) throw ArgumentError("fixed holdings shorter than the grid");
    std::copy_n(phi.begin() + static_cast<std::ptrdiff_t>(step * assets), assets, out.begin());
  };
}

HedgeReport evolve_portfolio(const levy::PathSeries& contract, std::span<const levy::PathSeries> assets,
                             const HedgeRule& rule, const levy::TimeGrid& grid) {
  const std::size_t n = grid.steps();
  const std::size_t m = assets.size();
  auto check = [n](const levy::PathSeries& p, const std::string& name) {
    if (p.values.size() != n + 1 || p.left_limits.size() != n)
      throw ArgumentError("evolve_portfolio: " + name + " path is not on the grid");
  };
  check(contract, "contract");
  for (std::size_t j = 0; j < m; ++j) check(assets[j], "asset " + std::to_string(j + 1));

  HedgeReport report;
  auto& strat = report.strategy;
  strat.assets = m;
  strat.phi.assign((n + 1) * m, 0.0);
  strat.theta.assign(n + 1, 0.0);
  report.portfolio.values.assign(n + 1, 0.0);
  report.portfolio.left_limits.assign(n, 0.0);
  report.residual_increments.assign(n, 0.0);

  std::vector<double> prices(m);
  auto holdings = [&](std::size_t point) { return std::span<double>(strat.phi).subspan(point * m, m); };

  // Rebalancing at grid point i uses the prices at i (values[i] == left_limits[i]).
  auto rebalance = [&](std::size_t i) {
    for (std::size_t j = 0; j < m; ++j) prices[j] = assets[j].values[i];
    rule(i, contract.values[i], prices, holdings(i));
  };

  rebalance(0);
  double position = 0.0;
  for (std::size_t j = 0; j < m; ++j) position += strat.phi[j] * assets[j].values[0];
  strat.theta[0] = position;  // short-sale proceeds go to the benchmark account
  double v = contract.values[0];
  report.portfolio.values[0] = v;

  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    report.portfolio.left_limits[i] = v;
    double dv = contract.values[i + 1] - contract.values[i];
    for (std::size_t j = 0; j < m; ++j)
      dv -= strat.phi[i * m + j] * (assets[j].values[i + 1] - assets[j].values[i]);
    if (!std::isfinite(dv)) throw IntegrationError(i, "non-finite portfolio increment");
    report.residual_increments[i] = dv;
    v += dv;
    report.portfolio.values[i + 1] = v;
    sum += dv;
    sum_sq += dv * dv;
    report.max_abs_residual = std::max(report.max_abs_residual, std::abs(dv));

    rebalance(i + 1);
    // Self-financing rebalance: theta absorbs the cost of changing phi at S_{i+1}.
    double trade = 0.0;
    for (std::size_t j = 0; j < m; ++j)
      trade += (strat.phi[(i + 1) * m + j] - strat.phi[i * m + j]) * assets[j].values[i + 1];
    strat.theta[i + 1] = strat.theta[i] + trade;
  }

  const double dev = v - contract.values[0];
  report.squared_deviation = dev * dev;
  const double mean = sum / static_cast<double>(n);
  report.per_step_std = std::sqrt(std::max(0.0, sum_sq / static_cast<double>(n) - mean * mean));
  return report;
}

double self_financing_error(const HedgeReport& report, const levy::PathSeries& contract,
                            std::span<const levy::PathSeries> assets) {
  const auto& strat = report.strategy;
  double worst = 0.0;
  for (std::size_t i = 0; i < report.portfolio.values.size(); ++i) {
    double v = contract.values[i] + strat.theta[i];
    for (std::size_t j = 0; j < assets.size(); ++j) v -= strat.holding(i, j) * assets[j].values[i];
    const double target = report.portfolio.values[i];
    worst = std::max(worst, std::abs(v - target) / std::max(1.0, std::abs(target)));
  }
  return worst;
}

}  // namespace levyhedge::hedging
