#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <type_traits>

#include "levyhedge/errors.hpp"
#include "levyhedge/levy/noise.hpp"
#include "levyhedge/levy/types.hpp"

namespace levyhedge::levy {

/// Callable (step, t, x_left) -> SymmetricCoefficients evaluated at the left limit.
template <class P>
concept CoefficientProvider = std::invocable<const P&, std::size_t, double, double> &&
    std::same_as<std::remove_cvref_t<std::invoke_result_t<const P&, std::size_t, double, double>>,
                 SymmetricCoefficients>;

namespace detail {
void check_shapes(const LevyMeasure& measure, const NoiseRealization& noise, const TimeGrid& grid);
}  // namespace detail

/// Increment alpha dt + beta dW_i + sum_k gamma_k (count_k - intensity_k dt) of step i.
double euler_increment(const SymmetricCoefficients& coeffs, const LevyMeasure& measure,
                       const NoiseRealization& noise, std::size_t step, double dt);

/// Euler scheme for the symmetric form; coefficients are frozen at X_{t_i-}
/// for the whole step, including steps with several jumps.
template <CoefficientProvider P>
PathSeries integrate(const P& provider, const LevyMeasure& measure, const NoiseRealization& noise,
                     const TimeGrid& grid, double x0) {
  detail::check_shapes(measure, noise, grid);
  if (!std::isfinite(x0)) throw IntegrationError(0, "non-finite initial value");
  const std::size_t n = grid.steps();
  const double dt = grid.dt();
  PathSeries path;
  path.values.reserve(n + 1);
  path.left_limits.reserve(n);
  path.values.push_back(x0);
  double x = x0;
  for (std::size_t i = 0; i < n; ++i) {
    path.left_limits.push_back(x);
    decltype(auto) coeffs = provider(i, grid.time(i), x);
    if (coeffs.jump_vol.size() != measure.size())
      throw IntegrationError(i, "coefficient provider returned wrong jump_vol length");
    x += euler_increment(coeffs, measure, noise, i, dt);
    if (!std::isfinite(x)) throw IntegrationError(i, "non-finite state");
    path.values.push_back(x);
  }
  return path;
}

/// Constant coefficients.
PathSeries integrate(const SymmetricCoefficients& coeffs, const LevyMeasure& measure,
                     const NoiseRealization& noise, const TimeGrid& grid, double x0);

/// Proportional dynamics dX = X_{t-} [alpha dt + beta dW + sum_k gamma_k dN~_k]
/// with constant coefficients, Euler scheme. Throws IntegrationError if the
/// state leaves (0, inf).
PathSeries integrate_proportional(const SymmetricCoefficients& coeffs, const LevyMeasure& measure,
                                  const NoiseRealization& noise, const TimeGrid& grid, double x0);

}  // namespace levyhedge::levy
