#include "levyhedge/market/asset.hpp"

#include <cmath>
#include <string>

#include "levyhedge/errors.hpp"
#include "levyhedge/levy/calculus.hpp"
#include "levyhedge/levy/integrate.hpp"

namespace levyhedge::market {

void AssetSpec::validate() const {
  if (!(initial_price > 0.0) || !std::isfinite(initial_price))
    throw InvariantError("asset: initial_price must be positive and finite");
  if (!std::isfinite(brownian_vol)) throw InvariantError("asset: non-finite brownian_vol");
  for (std::size_t k = 0; k < jump_vol.size(); ++k) {
    if (!std::isfinite(jump_vol[k]) || !(jump_vol[k] > -1.0))
      throw InvariantError("asset: jump_vol at atom " + std::to_string(k) + " must be finite and > -1");
  }
}

void AssetSpec::validate(const levy::LevyMeasure& measure) const {
  if (jump_vol.size() != measure.size())
    throw ArgumentError("asset: jump_vol has " + std::to_string(jump_vol.size()) + " entries, measure has " +
                        std::to_string(measure.size()) + " atoms");
  validate();
}

std::vector<double> AssetSpec::log_jump_vol() const {
  std::vector<double> out(jump_vol.size());
  for (std::size_t k = 0; k < jump_vol.size(); ++k) out[k] = std::log1p(jump_vol[k]);
  return out;
}

AssetSpec GeometricBernoulliSpec::to_asset(const levy::LevyMeasure& measure) const {
  AssetSpec a{initial_price, brownian_vol, std::vector<double>(measure.size())};
  for (std::size_t k = 0; k < measure.size(); ++k) a.jump_vol[k] = std::expm1(jump_exponent * measure.location(k));
  a.validate();
  return a;
}

namespace {
void check_lengths(const AssetSpec& asset, const PricingKernelSpec& kernel) {
  if (asset.jump_vol.size() != kernel.jump_mpr.size())
    throw ArgumentError("asset and pricing kernel have different atom counts");
  asset.validate();
  kernel.validate();
}
}  // namespace

AssetSpec to_natural(const AssetSpec& asset, const PricingKernelSpec& kernel) {
  check_lengths(asset, kernel);
  AssetSpec out{asset.initial_price, asset.brownian_vol - kernel.brownian_mpr, asset.jump_vol};
  for (std::size_t k = 0; k < out.jump_vol.size(); ++k) {
    const double l = kernel.jump_mpr[k];
    out.jump_vol[k] = asset.jump_vol[k] * (1.0 - l) - l;
    if (!(out.jump_vol[k] > -1.0))
      throw InvariantError("to_natural: natural jump_vol at atom " + std::to_string(k) + " is <= -1");
  }
  return out;
}

AssetSpec from_natural(const AssetSpec& asset, const PricingKernelSpec& kernel) {
  check_lengths(asset, kernel);
  AssetSpec out{asset.initial_price, asset.brownian_vol + kernel.brownian_mpr, asset.jump_vol};
  for (std::size_t k = 0; k < out.jump_vol.size(); ++k) {
    const double l = kernel.jump_mpr[k];
    out.jump_vol[k] = (asset.jump_vol[k] + l) / (1.0 - l);
  }
  return out;
}

double domestic_drift(const AssetSpec& asset, const PricingKernelSpec& kernel, const levy::LevyMeasure& measure) {
  asset.validate(measure);
  kernel.validate(measure);
  double drift = kernel.short_rate + kernel.brownian_mpr * asset.brownian_vol;
  for (std::size_t k = 0; k < measure.size(); ++k)
    drift += kernel.jump_mpr[k] * asset.jump_vol[k] * measure.intensity(k);
  return drift;
}

levy::SymmetricCoefficients domestic_coefficients(const AssetSpec& asset, const PricingKernelSpec& kernel,
                                                  const levy::LevyMeasure& measure) {
  return {domestic_drift(asset, kernel, measure), asset.brownian_vol, asset.jump_vol};
}

levy::PathSeries geometric_price_path(const AssetSpec& asset, const levy::LevyMeasure& measure,
                                      const levy::NoiseRealization& noise, const levy::TimeGrid& grid) {
  asset.validate(measure);
  return levy::geometric_path(asset.natural_coefficients(), measure, noise, grid, asset.initial_price);
}

levy::PathSeries euler_price_path(const AssetSpec& asset, const levy::LevyMeasure& measure,
                                  const levy::NoiseRealization& noise, const levy::TimeGrid& grid) {
  asset.validate(measure);
  return levy::integrate_proportional(asset.natural_coefficients(), measure, noise, grid, asset.initial_price);
}

}  // namespace levyhedge::market
