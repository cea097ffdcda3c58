#include "levyhedge/market/kernel.hpp"

#include <cmath>
#include <string>

#include "levyhedge/errors.hpp"
#include "levyhedge/levy/calculus.hpp"
#include "levyhedge/levy/integrate.hpp"

namespace levyhedge::market {

void PricingKernelSpec::validate() const {
  if (!std::isfinite(short_rate) || !std::isfinite(brownian_mpr))
    throw InvariantError("pricing kernel: non-finite rate or market price of risk");
  for (std::size_t k = 0; k < jump_mpr.size(); ++k) {
    if (!std::isfinite(jump_mpr[k]) || !(jump_mpr[k] < 1.0))
      throw InvariantError("pricing kernel: jump market price of risk at atom " + std::to_string(k) +
                           " must be finite and < 1");
  }
}

void PricingKernelSpec::validate(const levy::LevyMeasure& measure) const {
  if (jump_mpr.size() != measure.size())
    throw ArgumentError("pricing kernel: jump_mpr has " + std::to_string(jump_mpr.size()) +
                        " entries, measure has " + std::to_string(measure.size()) + " atoms");
  validate();
}

levy::PathSeries kernel_path(const PricingKernelSpec& kernel, const levy::LevyMeasure& measure,
                             const levy::NoiseRealization& noise, const levy::TimeGrid& grid) {
  kernel.validate(measure);
  levy::detail::check_shapes(measure, noise, grid);
  const double lambda = kernel.brownian_mpr;
  // Jump part: each jump multiplies by (1 - Lambda_k); compensator adds Lambda_k w_k per unit time.
  std::vector<double> log_factor(measure.size());
  for (std::size_t k = 0; k < measure.size(); ++k) log_factor[k] = std::log1p(-kernel.jump_mpr[k]);
  const double rate = -kernel.short_rate - 0.5 * lambda * lambda + levy::compensate(measure, kernel.jump_mpr);

  const std::size_t n = grid.steps();
  const auto dw = noise.brownian_increments();
  levy::PathSeries path;
  path.values.reserve(n + 1);
  path.left_limits.reserve(n);
  path.values.push_back(1.0);
  double w = 0.0;
  double jump_log = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    path.left_limits.push_back(path.values.back());
    w += dw[i];
    for (const auto& ev : noise.jumps(i)) jump_log += ev.count * log_factor[ev.atom];
    path.values.push_back(std::exp(rate * grid.time(i + 1) - lambda * w + jump_log));
  }
  return path;
}

levy::SymmetricCoefficients benchmark_coefficients(const PricingKernelSpec& kernel,
                                                   const levy::LevyMeasure& measure) {
  kernel.validate(measure);
  levy::SymmetricCoefficients c;
  c.drift = kernel.short_rate + kernel.brownian_mpr * kernel.brownian_mpr;
  c.brownian_vol = kernel.brownian_mpr;
  c.jump_vol.resize(measure.size());
  for (std::size_t k = 0; k < measure.size(); ++k) {
    const double l = kernel.jump_mpr[k];
    c.jump_vol[k] = l / (1.0 - l);
    c.drift += l * l / (1.0 - l) * measure.intensity(k);
  }
  return c;
}

levy::PathSeries benchmark_path(const PricingKernelSpec& kernel, const levy::LevyMeasure& measure,
                                const levy::NoiseRealization& noise, const levy::TimeGrid& grid) {
  return levy::geometric_path(benchmark_coefficients(kernel, measure), measure, noise, grid, 1.0);
}

}  // namespace levyhedge::market
