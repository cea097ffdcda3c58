#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace levyhedge::sim {

struct PropertyResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;  ///< measured statistics
};

/// Unset paths/steps use each suite's own default (10^4 paths for isometry
/// and martingale, 10^3 for ordering, 100 for pathwise checks; 1000 steps).
struct VerifyOptions {
  std::uint64_t seed = 1;
  std::optional<std::size_t> paths;
  std::optional<std::size_t> steps;
};

/// isometry, martingale, calculus, optimality, ordering, completeness.
std::span<const std::string_view> verify_suite_names();

/// Runs one suite, or every suite for "all". Throws ArgumentError on an unknown name.
std::vector<PropertyResult> run_verify_suite(std::string_view suite, const VerifyOptions& options);

}  // namespace levyhedge::sim
