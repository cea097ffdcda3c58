#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "levyhedge/levy/types.hpp"

namespace levyhedge::levy {

struct JumpEvent {
  std::uint32_t atom = 0;
  std::uint32_t count = 0;

  bool operator==(const JumpEvent&) const = default;
};

/// Brownian increments and per-step jump counts of one path. Every process
/// simulated on the same path consumes the same realization.
///
/// Jump events are stored compressed: step i owns events[offsets[i], offsets[i+1]),
/// sorted by atom index, with count >= 1 (zero counts are not stored).
class NoiseRealization {
 public:
  NoiseRealization() = default;

  /// Throws ArgumentError if offsets are inconsistent with the increments,
  /// an atom index is out of range, a count is zero, or atoms repeat in a step.
  NoiseRealization(std::vector<double> brownian_increments, std::vector<std::size_t> offsets,
                   std::vector<JumpEvent> events, std::size_t atom_count);

  /// Builds a realization from dense per-step counts, counts[i][k].
  static NoiseRealization from_counts(std::vector<double> brownian_increments,
                                      const std::vector<std::vector<std::uint32_t>>& counts,
                                      std::size_t atom_count);

  std::size_t steps() const noexcept { return brownian_.size(); }
  std::size_t atom_count() const noexcept { return atom_count_; }

  std::span<const double> brownian_increments() const noexcept { return brownian_; }
  std::span<const JumpEvent> jumps(std::size_t step) const;
  std::uint32_t count(std::size_t step, std::size_t atom) const;

  /// W at every grid point, length steps()+1, W_0 = 0.
  std::vector<double> brownian_path() const;
  /// Total number of jumps (all atoms) up to each grid point, length steps()+1.
  std::vector<std::uint64_t> jump_count_path() const;
  /// Cumulative count of one atom at each grid point, length steps()+1.
  std::vector<std::uint64_t> atom_count_path(std::size_t atom) const;
  /// Compound Poisson path sum of jump marks, length steps()+1.
  std::vector<double> compound_path(const LevyMeasure& measure) const;

  bool operator==(const NoiseRealization&) const = default;

 private:
  std::vector<double> brownian_;
  std::vector<std::size_t> offsets_{0};
  std::vector<JumpEvent> events_;
  std::size_t atom_count_ = 0;
};

/// Deterministic in (seed, path_index). Brownian and jump draws use disjoint
/// substreams, so adding or removing atoms leaves the Brownian increments unchanged.
NoiseRealization sample_noise(const LevyMeasure& measure, const TimeGrid& grid, std::uint64_t seed,
                              std::uint64_t path_index);

}  // namespace levyhedge::levy
