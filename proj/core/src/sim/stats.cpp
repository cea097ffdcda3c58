#include "levyhedge/sim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace levyhedge::sim {

double SampleStats::z_score(double target) const {
  const double diff = std::abs(mean - target);
  if (std_error > 0.0) return diff / std_error;
  return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

SampleStats sample_stats(std::span<const double> xs) {
  SampleStats s;
  s.count = xs.size();
  if (xs.empty()) return s;
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(s.count);
  if (s.count > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.variance = ss / static_cast<double>(s.count - 1);
    s.std_error = std::sqrt(s.variance / static_cast<double>(s.count));
  }
  return s;
}

double median(std::vector<double> xs) {
  if (xs.empty()) return std::numeric_limits<double>::quiet_NaN();
  const auto mid = xs.begin() + static_cast<std::ptrdiff_t>(xs.size() / 2);
  std::nth_element(xs.begin(), mid, xs.end());
  if (xs.size() % 2 == 1) return *mid;
  const double upper = *mid;
  const double lower = *std::max_element(xs.begin(), mid);
  return 0.5 * (lower + upper);
}

}  // namespace levyhedge::sim
