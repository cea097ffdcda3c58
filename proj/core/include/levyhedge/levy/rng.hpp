#pragma once

#include <cstdint>
#include <random>

namespace levyhedge::levy {

/// splitmix64 finalizer; used to derive independent substream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of substream `stream` of path `path_index` under master `seed`.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t path_index,
                                       std::uint64_t stream) noexcept {
  return mix64(mix64(mix64(seed) ^ path_index) ^ (stream * 0xD1B54A32D192ED03ULL));
}

enum class Substream : std::uint64_t { brownian = 1, jumps = 2 };

/// Random stream with platform-independent variates. The engine is
/// std::mt19937_64 (bit-exact by the standard); the distributions are
/// implemented here because std:: distributions are implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() noexcept;

  /// Standard normal (Box-Muller, both variates used).
  double normal() noexcept;

  /// Poisson(mean) by sequential inversion; means above 30 are split into
  /// independent chunks and summed.
  std::uint32_t poisson(double mean) noexcept;

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace levyhedge::levy
