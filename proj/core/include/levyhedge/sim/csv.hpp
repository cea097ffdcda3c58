#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "levyhedge/sim/run.hpp"

namespace levyhedge::sim {

/// Shortest-round-trip is not used: every value is written with 17
/// significant digits, '.' decimal point, independent of the C++ locale.
std::string format_double(double x);

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);

/// t,C,S1,...,Sn,phi1,...,phin,theta,V,dV; one row per grid point, dV empty on row 0.
void write_hedge_csv(std::ostream& out, const Scenario& s, const GoldenPath& golden);

/// t,N_t,X_t,C,S1,...,Sn: jump count, compound Poisson path and prices.
void write_market_csv(std::ostream& out, const Scenario& s, const GoldenPath& golden);

/// path,terminal_deviation,squared_deviation,residual_sum,residual_sum_sq,max_abs_residual
void write_path_summary_csv(std::ostream& out, const ScenarioResult& result);

}  // namespace levyhedge::sim
