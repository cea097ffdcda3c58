#include "levyhedge/hedging/gram.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "levyhedge/hedging/coefficients.hpp"

namespace levyhedge::hedging {

Eigen::MatrixXd GramSystem::scaled_matrix() const {
  Eigen::MatrixXd scaled = M;
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) scaled(i, j) /= asset_prices(i) * asset_prices(j);
  return scaled;
}

GramSystem gram_system(const market::AssetSpec& contract, std::span<const market::AssetSpec> assets,
                       double contract_price_left, std::span<const double> asset_prices_left,
                       const levy::LevyMeasure& measure) {
  if (assets.empty()) throw ArgumentError("gram_system: no hedging assets");
  if (assets.size() != asset_prices_left.size())
    throw ArgumentError("gram_system: " + std::to_string(assets.size()) + " assets but " +
                        std::to_string(asset_prices_left.size()) + " prices");
  if (!(contract_price_left > 0.0)) throw ArgumentError("gram_system: contract price must be positive");
  const auto n = static_cast<Eigen::Index>(assets.size());
  GramSystem sys;
  sys.M.resize(n, n);
  sys.F.resize(n);
  sys.asset_prices.resize(n);
  sys.contract_price = contract_price_left;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double si = asset_prices_left[i];
    if (!(si > 0.0)) throw ArgumentError("gram_system: asset price " + std::to_string(i) + " must be positive");
    sys.asset_prices(i) = si;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const double si = sys.asset_prices(i);
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double v = si * sys.asset_prices(j) * vol_inner_product(assets[i], assets[j], measure);
      sys.M(i, j) = v;
      sys.M(j, i) = v;
    }
    sys.F(i) = si * contract_price_left * vol_inner_product(assets[i], contract, measure);
  }
  sys.G = contract_price_left * contract_price_left * vol_inner_product(contract, contract, measure);
  return sys;
}

DegeneracyReport degeneracy_check(const GramSystem& system) {
  DegeneracyReport report;
  const auto n = system.M.rows();
  if (n == 0 || !system.M.allFinite()) {
    report.min_eigenvalue = report.max_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    report.condition_number = std::numeric_limits<double>::infinity();
    report.degenerate = true;
    return report;
  }
  const Eigen::MatrixXd scaled = system.scaled_matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(scaled, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  report.min_eigenvalue = ev.minCoeff();
  report.max_eigenvalue = ev.maxCoeff();
  report.condition_number = report.min_eigenvalue > 0.0 ? report.max_eigenvalue / report.min_eigenvalue
                                                        : std::numeric_limits<double>::infinity();
  report.threshold = kDegeneracyTolerance * scaled.trace() / static_cast<double>(n);
  report.degenerate = !(report.min_eigenvalue > report.threshold);
  return report;
}

Eigen::VectorXd multi_asset_hedge(const GramSystem& system) {
  const auto report = degeneracy_check(system);
  if (report.degenerate) {
    std::ostringstream msg;
    msg << "multi_asset_hedge: degenerate hedging assets (min eigenvalue " << report.min_eigenvalue
        << " <= threshold " << report.threshold << ")";
    throw DegeneracyError(msg.str(), report);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(system.M);
  if (llt.info() != Eigen::Success) throw DegeneracyError("multi_asset_hedge: Cholesky factorization failed", report);
  return llt.solve(system.F);
}

std::array<double, 2> two_asset_hedge(const market::AssetSpec& contract, const market::AssetSpec& asset1,
                                      const market::AssetSpec& asset2, std::array<double, 3> prices_left,
                                      const levy::LevyMeasure& measure) {
  const auto [c, s1, s2] = prices_left;
  if (!(c > 0.0) || !(s1 > 0.0) || !(s2 > 0.0)) throw ArgumentError("two_asset_hedge: prices must be positive");
  const double m1 = vol_inner_product(asset1, asset1, measure);
  const double m2 = vol_inner_product(asset2, asset2, measure);
  const double m12 = vol_inner_product(asset1, asset2, measure);
  const double l1 = vol_inner_product(contract, asset1, measure);
  const double l2 = vol_inner_product(contract, asset2, measure);

  const double p12 = l1 * m2, q12 = m12 * l2;
  const double p21 = l2 * m1, q21 = m12 * l1;
  const double r = m1 * m2 - m12 * m12;  // R^{12} == R^{21}
  const double threshold = kDegeneracyTolerance * m1 * m2;
  if (!(r > threshold)) {
    DegeneracyReport report{r, m1 * m2, std::numeric_limits<double>::infinity(), threshold, true};
    throw DegeneracyError("two_asset_hedge: R below degeneracy threshold", report);
  }
  return {(p12 - q12) / r * c / s1, (p21 - q21) / r * c / s2};
}

std::vector<double> optimal_ratios(const market::AssetSpec& contract, std::span<const market::AssetSpec> assets,
                                   const levy::LevyMeasure& measure) {
  const std::vector<double> unit(assets.size(), 1.0);
  const auto phi = multi_asset_hedge(gram_system(contract, assets, 1.0, unit, measure));
  return {phi.data(), phi.data() + phi.size()};
}

}  // namespace levyhedge::hedging
