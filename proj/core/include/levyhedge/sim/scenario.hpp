#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "levyhedge/levy/types.hpp"
#include "levyhedge/market/asset.hpp"
#include "levyhedge/market/kernel.hpp"

namespace levyhedge::sim {

enum class HedgeKind { none, single, two_asset, multi };

struct HedgeMode {
  HedgeKind kind = HedgeKind::none;
  std::size_t asset = 0;  ///< zero-based hedging asset for HedgeKind::single

  static HedgeMode none() { return {}; }
  static HedgeMode single(std::size_t asset) { return {HedgeKind::single, asset}; }
  static HedgeMode two_asset() { return {HedgeKind::two_asset, 0}; }
  static HedgeMode multi() { return {HedgeKind::multi, 0}; }

  bool operator==(const HedgeMode&) const = default;
};

/// How natural prices are generated on the grid. `euler` is linear in the
/// noise increments, so discrete hedges inherit the exact continuous-time
/// replication identities; `exact` evaluates the exponential solution.
enum class PriceScheme { euler, exact };

std::string_view to_string(HedgeKind kind);
std::string_view to_string(PriceScheme scheme);
HedgeKind parse_hedge_kind(std::string_view text);
PriceScheme parse_price_scheme(std::string_view text);

struct Scenario {
  std::string name;
  levy::LevyMeasure measure;
  std::optional<market::PricingKernelSpec> kernel;  ///< natural-units scenarios leave this empty
  market::GeometricBernoulliSpec contract;
  std::vector<market::GeometricBernoulliSpec> hedging_assets;
  levy::TimeGrid grid{1.0, 1000};
  std::size_t n_paths = 1000;
  std::uint64_t seed = 1;
  HedgeMode hedge_mode;
  PriceScheme price_scheme = PriceScheme::euler;
  std::size_t threads = 1;  ///< 0 selects std::thread::hardware_concurrency()

  /// Throws ArgumentError when the hedge mode needs more assets than given,
  /// n_paths is zero, or a spec is invalid for the measure.
  void validate() const;

  market::AssetSpec contract_asset() const { return contract.to_asset(measure); }
  std::vector<market::AssetSpec> hedging_asset_specs() const;
};

/// fig1, fig2a, fig2b, fig3, fig4.
std::span<const std::string_view> builtin_scenario_names();

/// Bernoulli jump-diffusion market (m = 15, p = 0.5, g = 1, h = -1, T = 1,
/// 1000 steps) with C_0 = S^1_0 = S^2_0 = 100. Throws ArgumentError on an unknown name.
Scenario builtin_scenario(std::string_view name);

}  // namespace levyhedge::sim
