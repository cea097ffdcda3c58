#include "levyhedge/levy/integrate.hpp"

#include <string>

namespace levyhedge::levy {

namespace detail {
void check_shapes(const LevyMeasure& measure, const NoiseRealization& noise, const TimeGrid& grid) {
  if (noise.steps() != grid.steps())
    throw ArgumentError("noise has " + std::to_string(noise.steps()) + " steps, grid has " +
                        std::to_string(grid.steps()));
  if (noise.atom_count() != measure.size())
    throw ArgumentError("noise was sampled for " + std::to_string(noise.atom_count()) + " atoms, measure has " +
                        std::to_string(measure.size()));
}
}  // namespace detail

double euler_increment(const SymmetricCoefficients& coeffs, const LevyMeasure& measure,
                       const NoiseRealization& noise, std::size_t step, double dt) {
  double inc = coeffs.drift * dt + coeffs.brownian_vol * noise.brownian_increments()[step];
  for (std::size_t k = 0; k < coeffs.jump_vol.size(); ++k)
    inc -= coeffs.jump_vol[k] * measure.intensity(k) * dt;
  for (const auto& ev : noise.jumps(step)) inc += coeffs.jump_vol[ev.atom] * ev.count;
  return inc;
}

PathSeries integrate(const SymmetricCoefficients& coeffs, const LevyMeasure& measure,
                     const NoiseRealization& noise, const TimeGrid& grid, double x0) {
  coeffs.validate(measure);
  return integrate([&coeffs](std::size_t, double, double) -> const SymmetricCoefficients& { return coeffs; },
                   measure, noise, grid, x0);
}

PathSeries integrate_proportional(const SymmetricCoefficients& coeffs, const LevyMeasure& measure,
                                  const NoiseRealization& noise, const TimeGrid& grid, double x0) {
  coeffs.validate(measure);
  detail::check_shapes(measure, noise, grid);
  if (!(x0 > 0.0) || !std::isfinite(x0)) throw IntegrationError(0, "initial value must be positive");
  const std::size_t n = grid.steps();
  const double dt = grid.dt();
  const double continuous = (coeffs.drift - compensate(measure, coeffs.jump_vol)) * dt;
  const auto dw = noise.brownian_increments();

  PathSeries path;
  path.values.reserve(n + 1);
  path.left_limits.reserve(n);
  path.values.push_back(x0);
  double x = x0;
  for (std::size_t i = 0; i < n; ++i) {
    path.left_limits.push_back(x);
    double factor = 1.0 + continuous + coeffs.brownian_vol * dw[i];
    for (const auto& ev : noise.jumps(i)) factor += coeffs.jump_vol[ev.atom] * ev.count;
    x *= factor;
    if (!(x > 0.0) || !std::isfinite(x)) throw IntegrationError(i, "proportional state left (0, inf)");
    path.values.push_back(x);
  }
  return path;
}

}  // namespace levyhedge::levy
