#include "levyhedge/hedging/coefficients.hpp"

#include <algorithm>
#include <limits>

#include "levyhedge/hedging/gram.hpp"

namespace levyhedge::hedging {

double vol_inner_product(const market::AssetSpec& a, const market::AssetSpec& b, const levy::LevyMeasure& measure) {
  a.validate(measure);
  b.validate(measure);
  double sum = a.brownian_vol * b.brownian_vol;
  for (std::size_t k = 0; k < measure.size(); ++k) sum += a.jump_vol[k] * b.jump_vol[k] * measure.intensity(k);
  return sum;
}

SingleHedgeCoefficients single_coefficients(const market::AssetSpec& contract, const market::AssetSpec& asset,
                                            const levy::LevyMeasure& measure) {
  return {vol_inner_product(contract, contract, measure), vol_inner_product(asset, contract, measure),
          vol_inner_product(asset, asset, measure)};
}

double single_asset_hedge(double contract_price_left, double asset_price_left, const SingleHedgeCoefficients& coeffs) {
  if (!(asset_price_left > 0.0)) throw ArgumentError("single_asset_hedge: asset price must be positive");
  const double threshold = kDegeneracyTolerance * coeffs.M;
  if (!(coeffs.M > threshold)) {
    DegeneracyReport report{coeffs.M, coeffs.M, std::numeric_limits<double>::infinity(), threshold, true};
    throw DegeneracyError("single_asset_hedge: hedging asset has degenerate dynamics (M = 0)", report);
  }
  return coeffs.L / coeffs.M * contract_price_left / asset_price_left;
}

double rho_diagnostic(const market::AssetSpec& contract, const market::AssetSpec& asset,
                      const levy::LevyMeasure& measure) {
  const auto c = single_coefficients(contract, asset, measure);
  if (!(c.K > 0.0) || !(c.M > 0.0)) {
    const double m = std::min(c.K, c.M);
    DegeneracyReport report{m, std::max(c.K, c.M), std::numeric_limits<double>::infinity(), 0.0, true};
    throw DegeneracyError("rho_diagnostic: K or M vanishes", report);
  }
  return std::clamp(c.L * c.L / (c.K * c.M), 0.0, 1.0);
}

}  // namespace levyhedge::hedging
