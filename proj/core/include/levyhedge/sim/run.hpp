#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "levyhedge/hedging/portfolio.hpp"
#include "levyhedge/levy/noise.hpp"
#include "levyhedge/sim/scenario.hpp"

namespace levyhedge::sim {

/// All prices on one path, driven by one shared noise realization.
struct SimulatedPath {
  levy::NoiseRealization noise;
  levy::PathSeries contract;
  std::vector<levy::PathSeries> assets;
};

SimulatedPath simulate_path(const Scenario& s, std::uint64_t path_index);

/// Constant hedge ratios phi^i S^i / C for every hedging asset (zero for
/// assets the mode does not use). Throws DegeneracyError.
std::vector<double> scenario_ratios(const Scenario& s);

struct PathSummary {
  std::uint64_t path_index = 0;
  double terminal_deviation = 0.0;  ///< V_T - V_0
  double residual_sum = 0.0;        ///< sum of dV
  double residual_sum_sq = 0.0;     ///< sum of dV^2
  double max_abs_residual = 0.0;
};

struct ScenarioAggregate {
  std::size_t paths = 0;
  std::size_t steps = 0;
  double delta_mc = 0.0;         ///< mean of (V_T - V_0)^2
  double delta_mc_stderr = 0.0;
  double per_step_std = 0.0;     ///< pooled over all steps of all paths
  double max_abs_residual = 0.0;
};

/// The reporting path (index 0), kept in full for CSV output.
struct GoldenPath {
  SimulatedPath path;
  hedging::HedgeReport report;
  std::optional<levy::PathSeries> kernel;
};

struct ScenarioResult {
  std::string name;
  std::vector<double> ratios;
  double delta_analytic = 0.0;
  std::optional<double> rho;  ///< single-asset mode only
  std::vector<PathSummary> paths;
  ScenarioAggregate aggregate;
  GoldenPath golden;
};

/// Aggregates in path order, so results do not depend on Scenario::threads.
ScenarioAggregate aggregate_paths(const std::vector<PathSummary>& paths, std::size_t steps);

/// Simulates n_paths paths, hedges each per hedge_mode, aggregates.
/// Deterministic in the scenario (including seed), independent of thread count.
ScenarioResult run_scenario(const Scenario& s);

}  // namespace levyhedge::sim
