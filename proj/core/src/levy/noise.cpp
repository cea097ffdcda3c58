#include "levyhedge/levy/noise.hpp"

#include <cmath>
#include <string>

#include "levyhedge/errors.hpp"
#include "levyhedge/levy/rng.hpp"

namespace levyhedge::levy {

NoiseRealization::NoiseRealization(std::vector<double> brownian_increments, std::vector<std::size_t> offsets,
                                   std::vector<JumpEvent> events, std::size_t atom_count)
    : brownian_(std::move(brownian_increments)),
      offsets_(std::move(offsets)),
      events_(std::move(events)),
      atom_count_(atom_count) {
  if (offsets_.size() != brownian_.size() + 1 || offsets_.front() != 0 || offsets_.back() != events_.size())
    throw ArgumentError("noise: jump offsets inconsistent with step count");
  for (std::size_t i = 0; i < steps(); ++i) {
    if (offsets_[i] > offsets_[i + 1]) throw ArgumentError("noise: decreasing jump offsets");
    for (std::size_t e = offsets_[i]; e < offsets_[i + 1]; ++e) {
      const auto& ev = events_[e];
      if (ev.atom >= atom_count_) throw ArgumentError("noise: atom index out of range at step " + std::to_string(i));
      if (ev.count == 0) throw ArgumentError("noise: zero jump count stored at step " + std::to_string(i));
      if (e > offsets_[i] && events_[e - 1].atom >= ev.atom)
        throw ArgumentError("noise: jump events not strictly ordered by atom at step " + std::to_string(i));
    }
  }
}

NoiseRealization NoiseRealization::from_counts(std::vector<double> brownian_increments,
                                               const std::vector<std::vector<std::uint32_t>>& counts,
                                               std::size_t atom_count) {
  if (counts.size() != brownian_increments.size())
    throw ArgumentError("noise: counts and increments differ in length");
  std::vector<std::size_t> offsets{0};
  std::vector<JumpEvent> events;
  for (const auto& row : counts) {
    if (row.size() != atom_count) throw ArgumentError("noise: count row has wrong atom count");
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k] > 0) events.push_back({static_cast<std::uint32_t>(k), row[k]});
    offsets.push_back(events.size());
  }
  return NoiseRealization(std::move(brownian_increments), std::move(offsets), std::move(events), atom_count);
}

std::span<const JumpEvent> NoiseRealization::jumps(std::size_t step) const {
  if (step >= steps()) throw ArgumentError("noise: step out of range");
  return std::span<const JumpEvent>(events_).subspan(offsets_[step], offsets_[step + 1] - offsets_[step]);
}

std::uint32_t NoiseRealization::count(std::size_t step, std::size_t atom) const {
  for (const auto& ev : jumps(step))
    if (ev.atom == atom) return ev.count;
  return 0;
}

std::vector<double> NoiseRealization::brownian_path() const {
  std::vector<double> w(steps() + 1, 0.0);
  for (std::size_t i = 0; i < steps(); ++i) w[i + 1] = w[i] + brownian_[i];
  return w;
}

std::vector<std::uint64_t> NoiseRealization::jump_count_path() const {
  std::vector<std::uint64_t> n(steps() + 1, 0);
  for (std::size_t i = 0; i < steps(); ++i) {
    n[i + 1] = n[i];
    for (const auto& ev : jumps(i)) n[i + 1] += ev.count;
  }
  return n;
}

std::vector<std::uint64_t> NoiseRealization::atom_count_path(std::size_t atom) const {
  std::vector<std::uint64_t> n(steps() + 1, 0);
  for (std::size_t i = 0; i < steps(); ++i) n[i + 1] = n[i] + count(i, atom);
  return n;
}

std::vector<double> NoiseRealization::compound_path(const LevyMeasure& measure) const {
  if (measure.size() != atom_count_) throw ArgumentError("noise: measure atom count mismatch");
  std::vector<double> x(steps() + 1, 0.0);
  for (std::size_t i = 0; i < steps(); ++i) {
    x[i + 1] = x[i];
    for (const auto& ev : jumps(i)) x[i + 1] += ev.count * measure.location(ev.atom);
  }
  return x;
}

NoiseRealization sample_noise(const LevyMeasure& measure, const TimeGrid& grid, std::uint64_t seed,
                              std::uint64_t path_index) {
  const std::size_t n = grid.steps();
  const double dt = grid.dt();
  const double sd = std::sqrt(dt);

  RandomStream brownian(substream_seed(seed, path_index, static_cast<std::uint64_t>(Substream::brownian)));
  std::vector<double> increments(n);
  for (auto& dw : increments) dw = sd * brownian.normal();

  std::vector<std::size_t> offsets;
  offsets.reserve(n + 1);
  offsets.push_back(0);
  std::vector<JumpEvent> events;
  if (!measure.empty()) {
    RandomStream jumps(substream_seed(seed, path_index, static_cast<std::uint64_t>(Substream::jumps)));
    std::vector<double> means(measure.size());
    for (std::size_t k = 0; k < measure.size(); ++k) means[k] = measure.intensity(k) * dt;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < means.size(); ++k) {
        const std::uint32_t c = jumps.poisson(means[k]);
        if (c > 0) events.push_back({static_cast<std::uint32_t>(k), c});
      }
      offsets.push_back(events.size());
    }
  } else {
    offsets.resize(n + 1, 0);
  }
  return NoiseRealization(std::move(increments), std::move(offsets), std::move(events), measure.size());
}

}  // namespace levyhedge::levy
