#pragma once

#include <span>

#include <Eigen/Dense>

#include "levyhedge/levy/types.hpp"
#include "levyhedge/market/asset.hpp"

namespace levyhedge::hedging {

/// Mean squared error of a constant-ratio hedge as a quadratic in the
/// ratios r_i = phi^i S^i / C:
///   Delta_T(r) = exposure * (G - 2 F.r + r.M.r)
/// with price-free G = <c,c>, F_i = <i,c>, M_ij = <i,j>.
struct DeltaQuadratic {
  double G = 0.0;
  Eigen::VectorXd F;
  Eigen::MatrixXd M;
  double exposure = 0.0;  ///< E[int_0^T C_u^2 du]

  double rate(std::span<const double> ratios) const;
  double delta(std::span<const double> ratios) const { return exposure * rate(ratios); }
};

DeltaQuadratic delta_quadratic(const market::AssetSpec& contract, std::span<const market::AssetSpec> assets,
                               const levy::LevyMeasure& measure, double horizon);

/// Error rate per unit C^2 and unit time: <c,c> - 2 sum_i r_i <i,c> + sum_ij r_i r_j <i,j>.
double delta_rate(const market::AssetSpec& contract, std::span<const market::AssetSpec> assets,
                  std::span<const double> ratios, const levy::LevyMeasure& measure);

/// E[int_0^T C_u^2 du] = C_0^2 (exp(K T) - 1) / K for the natural contract price,
/// with K = <c,c>; tends to C_0^2 T as K -> 0.
double contract_exposure(const market::AssetSpec& contract, const levy::LevyMeasure& measure, double horizon);

/// Delta_T = E[(V_T - V_0)^2] in natural units for constant ratios:
/// delta_rate * contract_exposure. Exact, no simulation.
double analytic_delta(const market::AssetSpec& contract, std::span<const market::AssetSpec> assets,
                      std::span<const double> ratios, const levy::LevyMeasure& measure, double horizon);

}  // namespace levyhedge::hedging
