#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace levyhedge::levy {

/// One atom of a finite-activity Levy measure: jumps of mark `location`
/// arrive at rate `intensity` per unit time.
struct JumpAtom {
  double location = 0.0;
  double intensity = 0.0;

  bool operator==(const JumpAtom&) const = default;
};

/// Finite sum of weighted Dirac masses. Empty means a pure-Brownian market.
class LevyMeasure {
 public:
  LevyMeasure() = default;

  /// Throws InvariantError on non-positive or non-finite intensity and on
  /// duplicated locations.
  explicit LevyMeasure(std::vector<JumpAtom> atoms);

  /// rate * (p * delta_g + (1 - p) * delta_h). Atoms of zero weight are dropped.
  static LevyMeasure bernoulli(double rate, double p, double g, double h);

  std::span<const JumpAtom> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }

  double location(std::size_t k) const { return atoms_.at(k).location; }
  double intensity(std::size_t k) const { return atoms_.at(k).intensity; }
  double total_intensity() const noexcept;

  bool operator==(const LevyMeasure&) const = default;

 private:
  std::vector<JumpAtom> atoms_;
};

/// Compensator integral: sum_k jump_vol[k] * intensity_k.
/// Throws ArgumentError when jump_vol.size() != measure.size().
double compensate(const LevyMeasure& measure, std::span<const double> jump_vol);

/// Uniform grid 0 = t_0 < ... < t_steps = horizon.
class TimeGrid {
 public:
  TimeGrid(double horizon, std::size_t steps);

  double horizon() const noexcept { return horizon_; }
  std::size_t steps() const noexcept { return steps_; }
  double dt() const noexcept { return horizon_ / static_cast<double>(steps_); }
  double time(std::size_t i) const noexcept {
    return i == steps_ ? horizon_ : horizon_ * static_cast<double>(i) / static_cast<double>(steps_);
  }

  bool operator==(const TimeGrid&) const = default;

 private:
  double horizon_;
  std::size_t steps_;
};

/// Coefficients (alpha, beta, gamma(x_k)) of the symmetric compensated form
///   dX = alpha dt + beta dW + sum_k gamma_k (N_k(dt) - intensity_k dt).
struct SymmetricCoefficients {
  double drift = 0.0;
  double brownian_vol = 0.0;
  std::vector<double> jump_vol;

  static SymmetricCoefficients null(std::size_t atoms) { return {0.0, 0.0, std::vector<double>(atoms, 0.0)}; }

  /// Throws ArgumentError on atom-count mismatch, InvariantError on non-finite entries.
  void validate(const LevyMeasure& measure) const;

  bool operator==(const SymmetricCoefficients&) const = default;
};

/// Values on the grid plus the left limits X_{t_i-} used as predictable
/// inputs for step i. On the grid left_limits[i] == values[i].
struct PathSeries {
  std::vector<double> values;
  std::vector<double> left_limits;

  std::size_t steps() const noexcept { return left_limits.size(); }
  double initial() const { return values.front(); }
  double terminal() const { return values.back(); }

  bool operator==(const PathSeries&) const = default;
};

}  // namespace levyhedge::levy
