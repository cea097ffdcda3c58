#pragma once

#include "levyhedge/levy/noise.hpp"
#include "levyhedge/levy/types.hpp"

namespace levyhedge::levy {

// Coefficient transforms for proportional symmetric processes
//   dX^a = X^a_{t-} [alpha^a dt + beta^a dW + sum_k gamma^a_k dN~_k].

/// Coefficients of X^1 X^2.
SymmetricCoefficients product_coefficients(const SymmetricCoefficients& a,
                                           const SymmetricCoefficients& b,
                                           const LevyMeasure& measure);

/// Coefficients of X^1 / X^2. Throws SingularDenominatorError if 1 + gamma^2_k == 0.
SymmetricCoefficients quotient_coefficients(const SymmetricCoefficients& a,
                                            const SymmetricCoefficients& b,
                                            const LevyMeasure& measure);

/// Exact solution of the proportional dynamics with constant coefficients:
///   x0 exp((alpha - beta^2/2 - sum_k gamma_k w_k) t + beta W_t) prod_k (1 + gamma_k)^{N_k(t)}.
/// Requires gamma_k > -1 (InvariantError otherwise).
PathSeries geometric_path(const SymmetricCoefficients& coeffs, const LevyMeasure& measure,
                          const NoiseRealization& noise, const TimeGrid& grid, double x0);

}  // namespace levyhedge::levy
