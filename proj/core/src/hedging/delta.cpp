#include "levyhedge/hedging/delta.hpp"

#include <cmath>

#include "levyhedge/errors.hpp"
#include "levyhedge/hedging/coefficients.hpp"

namespace levyhedge::hedging {

double DeltaQuadratic::rate(std::span<const double> ratios) const {
  if (static_cast<Eigen::Index>(ratios.size()) != F.size())
    throw ArgumentError("delta: one ratio per hedging asset required");
  const Eigen::Map<const Eigen::VectorXd> r(ratios.data(), F.size());
  return G - 2.0 * F.dot(r) + r.dot(M * r);
}

DeltaQuadratic delta_quadratic(const market::AssetSpec& contract, std::span<const market::AssetSpec> assets,
                               const levy::LevyMeasure& measure, double horizon) {
  const auto n = static_cast<Eigen::Index>(assets.size());
  DeltaQuadratic q;
  q.G = vol_inner_product(contract, contract, measure);
  q.F.resize(n);
  q.M.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    q.F(i) = vol_inner_product(assets[i], contract, measure);
    for (Eigen::Index j = 0; j < n; ++j) q.M(i, j) = vol_inner_product(assets[i], assets[j], measure);
  }
  q.exposure = contract_exposure(contract, measure, horizon);
  return q;
}

double delta_rate(const market::AssetSpec& contract, std::span<const market::AssetSpec> assets,
                  std::span<const double> ratios, const levy::LevyMeasure& measure) {
  return delta_quadratic(contract, assets, measure, 0.0).rate(ratios);
}

double contract_exposure(const market::AssetSpec& contract, const levy::LevyMeasure& measure, double horizon) {
  if (!(horizon >= 0.0)) throw ArgumentError("contract_exposure: horizon must be >= 0");
  const double k = vol_inner_product(contract, contract, measure);
  const double c0 = contract.initial_price;
  const double growth = k * horizon == 0.0 ? horizon : std::expm1(k * horizon) / k;
  return c0 * c0 * growth;
}

double analytic_delta(const market::AssetSpec& contract, std::span<const market::AssetSpec> assets,
                      std::span<const double> ratios, const levy::LevyMeasure& measure, double horizon) {
  return delta_quadratic(contract, assets, measure, horizon).delta(ratios);
}

}  // namespace levyhedge::hedging
