#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "levyhedge/levy/types.hpp"

namespace levyhedge::hedging {

/// Fills phi (one entry per hedging asset) for step `step` from left-limit prices.
using HedgeRule =
    std::function<void(std::size_t step, double contract_left, std::span<const double> assets_left, std::span<double> phi)>;

/// phi^i = ratio_i * C_{t-} / S^i_{t-}.
HedgeRule constant_ratio_rule(std::vector<double> ratios);

/// Replays precomputed holdings; phi is row-major with one row per grid point.
HedgeRule fixed_holdings_rule(std::vector<double> phi, std::size_t assets);

/// Holdings on the grid. Row i of phi is held over [t_i, t_{i+1}); theta[i]
/// is the benchmark position right after rebalancing at t_i.
struct HedgeStrategy {
  std::size_t assets = 0;
  std::vector<double> phi;
  std::vector<double> theta;

  double holding(std::size_t point, std::size_t asset) const { return phi[point * assets + asset]; }
};

struct HedgeReport {
  HedgeStrategy strategy;
  levy::PathSeries portfolio;               ///< V_t, V_0 = C_0
  std::vector<double> residual_increments;  ///< dV per step
  double squared_deviation = 0.0;           ///< (V_T - V_0)^2, this path's sample of Delta_T
  double per_step_std = 0.0;
  double max_abs_residual = 0.0;
  std::optional<double> delta_analytic;
  std::optional<double> rho;
};

/// Self-financing evolution dV = dC - sum_i phi^i dS^i with phi taken from
/// the rule at each grid point's left limits. theta follows from
/// theta_t = sum_i phi^i_t S^i_t - int_0^t phi dS.
HedgeReport evolve_portfolio(const levy::PathSeries& contract, std::span<const levy::PathSeries> assets,
                             const HedgeRule& rule, const levy::TimeGrid& grid);

/// Largest |C_t - sum phi S + theta - V_t| / max(1, |V_t|) over the grid.
double self_financing_error(const HedgeReport& report, const levy::PathSeries& contract,
                            std::span<const levy::PathSeries> assets);

}  // namespace levyhedge::hedging
