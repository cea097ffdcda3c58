#pragma once

#include <cstddef>
#include <vector>

#include "levyhedge/sim/scenario.hpp"

namespace levyhedge::sim {

/// Closed 1-D lattice lo, lo + step, ..., hi.
struct RatioGrid {
  double lo = 0.0;
  double hi = 2.0;
  double step = 1e-3;

  std::size_t points() const;
  double at(std::size_t i) const { return lo + static_cast<double>(i) * step; }
};

struct BruteForceResult {
  std::vector<double> best_ratios;    ///< one per hedging asset in use
  double best_delta = 0.0;
  std::vector<std::size_t> shape;     ///< lattice size per dimension
  std::vector<double> surface;        ///< analytic Delta_T, row-major over shape
};

/// Exhaustive lattice search of the analytic Delta_T over constant ratios.
/// single: 1-D over the chosen asset; two_asset: 2-D over assets 1 and 2.
/// Other modes throw ArgumentError.
BruteForceResult brute_force_constant_hedge(const Scenario& s, const RatioGrid& grid);

}  // namespace levyhedge::sim
