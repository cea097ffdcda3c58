#pragma once

#include <vector>

#include "levyhedge/levy/noise.hpp"
#include "levyhedge/levy/types.hpp"
#include "levyhedge/market/kernel.hpp"

namespace levyhedge::market {

/// Constant-volatility asset: S_0, Brownian vol sigma, proportional jump
/// vol Sigma_k per atom. Whether the vols are domestic or natural depends on
/// context; to_natural/from_natural convert between the two.
struct AssetSpec {
  double initial_price = 1.0;
  double brownian_vol = 0.0;
  std::vector<double> jump_vol;

  /// initial_price > 0, finite entries, Sigma_k > -1.
  void validate() const;
  void validate(const levy::LevyMeasure& measure) const;

  /// log(1 + Sigma_k).
  std::vector<double> log_jump_vol() const;

  /// Driftless proportional coefficients (sigma, Sigma) of the natural price.
  levy::SymmetricCoefficients natural_coefficients() const { return {0.0, brownian_vol, jump_vol}; }

  bool operator==(const AssetSpec&) const = default;
};

/// Geometric Bernoulli jump-diffusion: log-jump proportional to the mark,
/// Sigma(x) = exp(jump_exponent * x) - 1.
struct GeometricBernoulliSpec {
  double initial_price = 100.0;
  double brownian_vol = 0.0;
  double jump_exponent = 0.0;

  AssetSpec to_asset(const levy::LevyMeasure& measure) const;

  bool operator==(const GeometricBernoulliSpec&) const = default;
};

/// Domestic vols -> natural vols: sigma - lambda, Sigma_k (1 - Lambda_k) - Lambda_k.
/// The initial price is unchanged (pi_0 = 1).
AssetSpec to_natural(const AssetSpec& asset, const PricingKernelSpec& kernel);

/// Inverse of to_natural: sigma_bar + lambda, (Sigma_bar_k + Lambda_k) / (1 - Lambda_k).
AssetSpec from_natural(const AssetSpec& asset, const PricingKernelSpec& kernel);

/// r + lambda sigma + sum_k Lambda_k Sigma_k w_k.
double domestic_drift(const AssetSpec& asset, const PricingKernelSpec& kernel, const levy::LevyMeasure& measure);

/// Proportional coefficients of the domestic price (drift from domestic_drift).
levy::SymmetricCoefficients domestic_coefficients(const AssetSpec& asset, const PricingKernelSpec& kernel,
                                                  const levy::LevyMeasure& measure);

/// Natural price from the exact exponential solution; strictly positive.
levy::PathSeries geometric_price_path(const AssetSpec& asset, const levy::LevyMeasure& measure,
                                      const levy::NoiseRealization& noise, const levy::TimeGrid& grid);

/// Natural price from the proportional Euler scheme
///   S_{i+1} = S_i (1 + sigma dW_i + sum_k Sigma_k (N_k - w_k dt)).
/// Increments are linear in the noise, which is what makes discrete
/// replication exact in complete configurations.
levy::PathSeries euler_price_path(const AssetSpec& asset, const levy::LevyMeasure& measure,
                                  const levy::NoiseRealization& noise, const levy::TimeGrid& grid);

}  // namespace levyhedge::market
