#include "levyhedge/levy/rng.hpp"

#include <cmath>
#include <numbers>

namespace levyhedge::levy {

double RandomStream::uniform() noexcept {
  // (k + 0.5) / 2^53 never hits 0 or 1.
  const std::uint64_t k = engine_() >> 11;
  return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
}

double RandomStream::normal() noexcept {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::uint32_t RandomStream::poisson(double mean) noexcept {
  constexpr double chunk = 30.0;
  std::uint32_t total = 0;
  while (mean > chunk) {
    total += poisson(chunk);
    mean -= chunk;
  }
  if (mean <= 0.0) return total;
  const double u = uniform();
  double term = std::exp(-mean);
  double cdf = term;
  std::uint32_t k = 0;
  // The cap only matters if rounding keeps cdf below u in the far tail.
  while (u > cdf && k < 1000) {
    ++k;
    term *= mean / static_cast<double>(k);
    cdf += term;
  }
  return total + k;
}

}  // namespace levyhedge::levy
