#pragma once

#include <cstddef>
#include <vector>

#include "levyhedge/levy/noise.hpp"
#include "levyhedge/levy/types.hpp"

namespace levyhedge::market {

/// Pricing kernel d pi = -pi_{t-} [r dt + lambda dW + sum_k Lambda_k dN~_k]
/// with constant coefficients. Requires Lambda_k < 1.
struct PricingKernelSpec {
  double short_rate = 0.0;
  double brownian_mpr = 0.0;
  std::vector<double> jump_mpr;

  static PricingKernelSpec null(std::size_t atoms) { return {0.0, 0.0, std::vector<double>(atoms, 0.0)}; }

  /// Finite entries and Lambda_k < 1 (InvariantError).
  void validate() const;
  /// Additionally checks the atom count against the measure (ArgumentError).
  void validate(const levy::LevyMeasure& measure) const;

  bool operator==(const PricingKernelSpec&) const = default;
};

/// pi_t on the grid from its exponential closed form, pi_0 = 1.
levy::PathSeries kernel_path(const PricingKernelSpec& kernel, const levy::LevyMeasure& measure,
                             const levy::NoiseRealization& noise, const levy::TimeGrid& grid);

/// Proportional coefficients of the benchmark xi = 1/pi:
///   drift r + lambda^2 + sum_k Lambda_k^2/(1-Lambda_k) w_k, vol lambda, jumps Lambda_k/(1-Lambda_k).
levy::SymmetricCoefficients benchmark_coefficients(const PricingKernelSpec& kernel,
                                                   const levy::LevyMeasure& measure);

/// xi_t evaluated as the geometric solution of benchmark_coefficients, xi_0 = 1.
levy::PathSeries benchmark_path(const PricingKernelSpec& kernel, const levy::LevyMeasure& measure,
                                const levy::NoiseRealization& noise, const levy::TimeGrid& grid);

}  // namespace levyhedge::market
