#include "levyhedge/levy/types.hpp"

#include <cmath>
#include <string>

#include "levyhedge/errors.hpp"

namespace levyhedge::levy {

LevyMeasure::LevyMeasure(std::vector<JumpAtom> atoms) : atoms_(std::move(atoms)) {
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    const auto& a = atoms_[k];
    if (!std::isfinite(a.location))
      throw InvariantError("jump atom " + std::to_string(k) + ": non-finite location");
    if (!(a.intensity > 0.0) || !std::isfinite(a.intensity))
      throw InvariantError("jump atom " + std::to_string(k) + ": intensity must be positive and finite");
    for (std::size_t j = 0; j < k; ++j) {
      if (atoms_[j].location == a.location)
        throw InvariantError("jump atoms " + std::to_string(j) + " and " + std::to_string(k) +
                             " share location " + std::to_string(a.location));
    }
  }
}

LevyMeasure LevyMeasure::bernoulli(double rate, double p, double g, double h) {
  if (!(rate >= 0.0) || !std::isfinite(rate)) throw ArgumentError("bernoulli measure: rate must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("bernoulli measure: p must lie in [0, 1]");
  std::vector<JumpAtom> atoms;
  if (rate * p > 0.0) atoms.push_back({g, rate * p});
  if (rate * (1.0 - p) > 0.0) atoms.push_back({h, rate * (1.0 - p)});
  return LevyMeasure(std::move(atoms));
}

double LevyMeasure::total_intensity() const noexcept {
  double total = 0.0;
  for (const auto& a : atoms_) total += a.intensity;
  return total;
}

double compensate(const LevyMeasure& measure, std::span<const double> jump_vol) {
  if (jump_vol.size() != measure.size())
    throw ArgumentError("compensate: jump_vol has " + std::to_string(jump_vol.size()) +
                        " entries, measure has " + std::to_string(measure.size()) + " atoms");
  double sum = 0.0;
  for (std::size_t k = 0; k < jump_vol.size(); ++k) sum += jump_vol[k] * measure.intensity(k);
  return sum;
}

TimeGrid::TimeGrid(double horizon, std::size_t steps) : horizon_(horizon), steps_(steps) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw ArgumentError("time grid: horizon must be positive");
  if (steps == 0) throw ArgumentError("time grid: steps must be positive");
}

void SymmetricCoefficients::validate(const LevyMeasure& measure) const {
  if (jump_vol.size() != measure.size())
    throw ArgumentError("coefficients: jump_vol has " + std::to_string(jump_vol.size()) +
                        " entries, measure has " + std::to_string(measure.size()) + " atoms");
  if (!std::isfinite(drift) || !std::isfinite(brownian_vol))
    throw InvariantError("coefficients: non-finite drift or brownian_vol");
  for (double g : jump_vol)
    if (!std::isfinite(g)) throw InvariantError("coefficients: non-finite jump_vol");
}

}  // namespace levyhedge::levy
