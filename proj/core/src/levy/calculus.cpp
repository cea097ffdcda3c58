#include "levyhedge/levy/calculus.hpp"

#include <cmath>
#include <string>

#include "levyhedge/errors.hpp"
#include "levyhedge/levy/integrate.hpp"

namespace levyhedge::levy {

namespace {
void check_pair(const SymmetricCoefficients& a, const SymmetricCoefficients& b, const LevyMeasure& measure) {
  a.validate(measure);
  b.validate(measure);
}
}  // namespace

SymmetricCoefficients product_coefficients(const SymmetricCoefficients& a, const SymmetricCoefficients& b,
                                           const LevyMeasure& measure) {
  check_pair(a, b, measure);
  SymmetricCoefficients out;
  out.drift = a.drift + b.drift + a.brownian_vol * b.brownian_vol;
  out.brownian_vol = a.brownian_vol + b.brownian_vol;
  out.jump_vol.resize(measure.size());
  for (std::size_t k = 0; k < measure.size(); ++k) {
    const double ga = a.jump_vol[k], gb = b.jump_vol[k];
    out.drift += ga * gb * measure.intensity(k);
    out.jump_vol[k] = ga + gb + ga * gb;
  }
  return out;
}

SymmetricCoefficients quotient_coefficients(const SymmetricCoefficients& a, const SymmetricCoefficients& b,
                                            const LevyMeasure& measure) {
  check_pair(a, b, measure);
  SymmetricCoefficients out;
  out.drift = a.drift - b.drift - b.brownian_vol * (a.brownian_vol - b.brownian_vol);
  out.brownian_vol = a.brownian_vol - b.brownian_vol;
  out.jump_vol.resize(measure.size());
  for (std::size_t k = 0; k < measure.size(); ++k) {
    const double denom = 1.0 + b.jump_vol[k];
    if (denom == 0.0) throw SingularDenominatorError(k);
    const double g = (a.jump_vol[k] - b.jump_vol[k]) / denom;
    out.drift -= b.jump_vol[k] * g * measure.intensity(k);
    out.jump_vol[k] = g;
  }
  return out;
}

PathSeries geometric_path(const SymmetricCoefficients& coeffs, const LevyMeasure& measure,
                          const NoiseRealization& noise, const TimeGrid& grid, double x0) {
  coeffs.validate(measure);
  detail::check_shapes(measure, noise, grid);
  if (!(x0 > 0.0) || !std::isfinite(x0)) throw ArgumentError("geometric path: initial value must be positive");
  std::vector<double> log_jump(measure.size());
  for (std::size_t k = 0; k < measure.size(); ++k) {
    if (!(coeffs.jump_vol[k] > -1.0))
      throw InvariantError("geometric path: jump_vol at atom " + std::to_string(k) + " must exceed -1");
    log_jump[k] = std::log1p(coeffs.jump_vol[k]);
  }
  const double rate =
      coeffs.drift - 0.5 * coeffs.brownian_vol * coeffs.brownian_vol - compensate(measure, coeffs.jump_vol);
  const std::size_t n = grid.steps();
  const auto dw = noise.brownian_increments();

  PathSeries path;
  path.values.reserve(n + 1);
  path.left_limits.reserve(n);
  path.values.push_back(x0);
  // Cumulative sums of W and of jump log-factors; the exponent is rebuilt at
  // every grid point so no multiplicative rounding accumulates.
  double w = 0.0;
  double jump_log = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    path.left_limits.push_back(path.values.back());
    w += dw[i];
    for (const auto& ev : noise.jumps(i)) jump_log += ev.count * log_jump[ev.atom];
    path.values.push_back(x0 * std::exp(rate * grid.time(i + 1) + coeffs.brownian_vol * w + jump_log));
  }
  return path;
}

}  // namespace levyhedge::levy
