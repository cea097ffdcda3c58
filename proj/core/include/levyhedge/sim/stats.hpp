#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace levyhedge::sim {

struct SampleStats {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  ///< unbiased (n - 1)
  double std_error = 0.0;

  /// |mean - target| / std_error, or +inf/0 when std_error is 0.
  double z_score(double target) const;
};

SampleStats sample_stats(std::span<const double> xs);

/// Median of a copy of xs. Empty input returns NaN.
double median(std::vector<double> xs);

}  // namespace levyhedge::sim
