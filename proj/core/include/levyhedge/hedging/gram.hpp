#pragma once

#include <array>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "levyhedge/errors.hpp"
#include "levyhedge/levy/types.hpp"
#include "levyhedge/market/asset.hpp"

namespace levyhedge::hedging {

/// Relative tolerance for degeneracy: the scaled Gram matrix is degenerate
/// when its smallest eigenvalue is <= kDegeneracyTolerance * trace / n.
inline constexpr double kDegeneracyTolerance = 1e-10;

/// M^{ij} = S^i S^j <i, j>,  F^i = S^i C <i, c>,  G = C^2 <c, c>
/// where <., .> is vol_inner_product. asset_prices keeps the S^i used so
/// that the price-free (scaled) matrix can be recovered.
struct GramSystem {
  Eigen::MatrixXd M;
  Eigen::VectorXd F;
  double G = 0.0;
  Eigen::VectorXd asset_prices;
  double contract_price = 1.0;

  std::size_t size() const noexcept { return static_cast<std::size_t>(F.size()); }
  /// M^{ij} / (S^i S^j).
  Eigen::MatrixXd scaled_matrix() const;
};

struct DegeneracyReport {
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  double condition_number = 0.0;  ///< +inf when min_eigenvalue <= 0
  double threshold = 0.0;
  bool degenerate = false;
};

class DegeneracyError : public Error {
 public:
  DegeneracyError(const std::string& what, DegeneracyReport report) : Error(what), report_(report) {}
  const DegeneracyReport& report() const noexcept { return report_; }

 private:
  DegeneracyReport report_;
};

/// Throws ArgumentError on dimension mismatch or non-positive prices.
GramSystem gram_system(const market::AssetSpec& contract, std::span<const market::AssetSpec> assets,
                       double contract_price_left, std::span<const double> asset_prices_left,
                       const levy::LevyMeasure& measure);

/// Eigenvalues of the scaled Gram matrix and the degeneracy verdict.
DegeneracyReport degeneracy_check(const GramSystem& system);

/// Solves M phi = F by Cholesky. Throws DegeneracyError (with report) on a
/// degenerate system.
Eigen::VectorXd multi_asset_hedge(const GramSystem& system);

/// Closed-form two-asset hedge from the P/Q/R coefficients. Returns units
/// (phi^1, phi^2). Throws DegeneracyError when R <= kDegeneracyTolerance * M^1 M^2.
std::array<double, 2> two_asset_hedge(const market::AssetSpec& contract, const market::AssetSpec& asset1,
                                      const market::AssetSpec& asset2, std::array<double, 3> prices_left,
                                      const levy::LevyMeasure& measure);

/// Price-free hedge ratios phi^i S^i / C. With constant vols these do not
/// depend on time or state.
std::vector<double> optimal_ratios(const market::AssetSpec& contract, std::span<const market::AssetSpec> assets,
                                   const levy::LevyMeasure& measure);

}  // namespace levyhedge::hedging
