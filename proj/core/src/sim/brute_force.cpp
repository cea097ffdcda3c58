#include "levyhedge/sim/brute_force.hpp"

#include <cmath>
#include <limits>

#include "levyhedge/errors.hpp"
#include "levyhedge/hedging/delta.hpp"

namespace levyhedge::sim {

std::size_t RatioGrid::points() const {
  if (!(step > 0.0) || !(hi >= lo)) throw ArgumentError("ratio grid: need step > 0 and hi >= lo");
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

BruteForceResult brute_force_constant_hedge(const Scenario& s, const RatioGrid& grid) {
  s.validate();
  const auto contract = s.contract_asset();
  const auto all = s.hedging_asset_specs();
  std::vector<market::AssetSpec> used;
  switch (s.hedge_mode.kind) {
    case HedgeKind::single: used = {all[s.hedge_mode.asset]}; break;
    case HedgeKind::two_asset: used = {all[0], all[1]}; break;
    default: throw ArgumentError("brute force: hedge mode must be single or two_asset");
  }
  const auto quad = hedging::delta_quadratic(contract, used, s.measure, s.grid.horizon());
  const std::size_t n = grid.points();

  BruteForceResult out;
  out.best_delta = std::numeric_limits<double>::infinity();
  if (used.size() == 1) {
    out.shape = {n};
    out.surface.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double r[1] = {grid.at(i)};
      const double d = quad.delta(r);
      out.surface[i] = d;
      if (d < out.best_delta) {
        out.best_delta = d;
        out.best_ratios = {r[0]};
      }
    }
  } else {
    out.shape = {n, n};
    out.surface.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double r[2] = {grid.at(i), grid.at(j)};
        const double d = quad.delta(r);
        out.surface[i * n + j] = d;
        if (d < out.best_delta) {
          out.best_delta = d;
          out.best_ratios = {r[0], r[1]};
        }
      }
    }
  }
  return out;
}

}  // namespace levyhedge::sim
