#include "levyhedge/sim/scenario.hpp"

#include <array>
#include <string>

#include "levyhedge/errors.hpp"

namespace levyhedge::sim {

std::string_view to_string(HedgeKind kind) {
  switch (kind) {
    case HedgeKind::none: return "none";
    case HedgeKind::single: return "single";
    case HedgeKind::two_asset: return "two_asset";
    case HedgeKind::multi: return "multi";
  }
  return "none";
}

std::string_view to_string(PriceScheme scheme) { return scheme == PriceScheme::euler ? "euler" : "exact"; }

HedgeKind parse_hedge_kind(std::string_view text) {
  for (auto k : {HedgeKind::none, HedgeKind::single, HedgeKind::two_asset, HedgeKind::multi})
    if (to_string(k) == text) return k;
  throw ArgumentError("unknown hedge mode '" + std::string(text) + "'");
}

PriceScheme parse_price_scheme(std::string_view text) {
  if (text == "euler") return PriceScheme::euler;
  if (text == "exact") return PriceScheme::exact;
  throw ArgumentError("unknown price scheme '" + std::string(text) + "'");
}

std::vector<market::AssetSpec> Scenario::hedging_asset_specs() const {
  std::vector<market::AssetSpec> out;
  out.reserve(hedging_assets.size());
  for (const auto& a : hedging_assets) out.push_back(a.to_asset(measure));
  return out;
}

void Scenario::validate() const {
  if (n_paths == 0) throw ArgumentError("scenario '" + name + "': n_paths must be >= 1");
  const std::size_t n = hedging_assets.size();
  switch (hedge_mode.kind) {
    case HedgeKind::none: break;
    case HedgeKind::single:
      if (hedge_mode.asset >= n)
        throw ArgumentError("scenario '" + name + "': single hedge uses asset " +
                            std::to_string(hedge_mode.asset + 1) + " but only " + std::to_string(n) +
                            " hedging assets are defined");
      break;
    case HedgeKind::two_asset:
      if (n < 2) throw ArgumentError("scenario '" + name + "': two_asset hedge needs 2 hedging assets");
      break;
    case HedgeKind::multi:
      if (n < 1) throw ArgumentError("scenario '" + name + "': multi hedge needs at least 1 hedging asset");
      break;
  }
  contract_asset();
  hedging_asset_specs();
  if (kernel) kernel->validate(measure);
}

namespace {
constexpr std::array<std::string_view, 5> kNames{"fig1", "fig2a", "fig2b", "fig3", "fig4"};
}

std::span<const std::string_view> builtin_scenario_names() { return kNames; }

Scenario builtin_scenario(std::string_view name) {
  Scenario s;
  s.name = std::string(name);
  s.measure = levy::LevyMeasure::bernoulli(15.0, 0.5, 1.0, -1.0);
  s.contract = {100.0, 0.15, 0.25};
  s.hedging_assets = {{100.0, 0.20, 0.30}, {100.0, 0.10, 0.20}};
  s.grid = levy::TimeGrid(1.0, 1000);
  if (name == "fig1") {
    s.hedge_mode = HedgeMode::none();
  } else if (name == "fig2a") {
    s.hedge_mode = HedgeMode::single(0);
  } else if (name == "fig2b") {
    s.hedge_mode = HedgeMode::single(1);
  } else if (name == "fig3") {
    s.hedge_mode = HedgeMode::two_asset();
  } else if (name == "fig4") {
    s.hedge_mode = HedgeMode::two_asset();
    s.contract.brownian_vol = 0.002;
    s.hedging_assets[0].brownian_vol = 0.003;
    s.hedging_assets[1].brownian_vol = 0.001;
  } else {
    throw ArgumentError("unknown builtin scenario '" + std::string(name) + "'");
  }
  return s;
}

}  // namespace levyhedge::sim
