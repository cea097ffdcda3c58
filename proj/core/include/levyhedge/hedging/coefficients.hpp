#pragma once

#include "levyhedge/levy/types.hpp"
#include "levyhedge/market/asset.hpp"

namespace levyhedge::hedging {

/// Volatility inner product sigma^a sigma^b + sum_k Sigma^a_k Sigma^b_k w_k of
/// two natural-unit assets.
double vol_inner_product(const market::AssetSpec& a, const market::AssetSpec& b, const levy::LevyMeasure& measure);

/// Per-unit-time coefficients of the single-asset mean squared error
///   K C^2 - 2 phi L S C + phi^2 M S^2.
struct SingleHedgeCoefficients {
  double K = 0.0;  ///< contract variance rate
  double L = 0.0;  ///< contract/asset covariance rate
  double M = 0.0;  ///< asset variance rate

  bool operator==(const SingleHedgeCoefficients&) const = default;
};

SingleHedgeCoefficients single_coefficients(const market::AssetSpec& contract, const market::AssetSpec& asset,
                                            const levy::LevyMeasure& measure);

/// Optimal units of the hedging asset to short: (L / M) * C_{t-} / S_{t-}.
/// Throws DegeneracyError when M is at or below the degeneracy threshold.
double single_asset_hedge(double contract_price_left, double asset_price_left, const SingleHedgeCoefficients& coeffs);

/// L^2 / (K M), in [0, 1]; 1 iff a perfect single-asset hedge exists.
/// Throws DegeneracyError if K or M vanishes.
double rho_diagnostic(const market::AssetSpec& contract, const market::AssetSpec& asset,
                      const levy::LevyMeasure& measure);

}  // namespace levyhedge::hedging
