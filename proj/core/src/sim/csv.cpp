#include "levyhedge/sim/csv.hpp"

#include <charconv>
#include <ostream>

namespace levyhedge::sim {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

void write_hedge_csv(std::ostream& out, const Scenario& s, const GoldenPath& golden) {
  const std::size_t m = golden.path.assets.size();
  std::vector<std::string> header{"t", "C"};
  for (std::size_t j = 1; j <= m; ++j) header.push_back("S" + std::to_string(j));
  for (std::size_t j = 1; j <= m; ++j) header.push_back("phi" + std::to_string(j));
  header.insert(header.end(), {"theta", "V", "dV"});
  write_csv_row(out, header);

  const auto& rep = golden.report;
  for (std::size_t i = 0; i <= s.grid.steps(); ++i) {
    std::vector<std::string> row{format_double(s.grid.time(i)), format_double(golden.path.contract.values[i])};
    for (const auto& a : golden.path.assets) row.push_back(format_double(a.values[i]));
    for (std::size_t j = 0; j < m; ++j) row.push_back(format_double(rep.strategy.holding(i, j)));
    row.push_back(format_double(rep.strategy.theta[i]));
    row.push_back(format_double(rep.portfolio.values[i]));
    row.push_back(i == 0 ? std::string() : format_double(rep.residual_increments[i - 1]));
    write_csv_row(out, row);
  }
}

void write_market_csv(std::ostream& out, const Scenario& s, const GoldenPath& golden) {
  const std::size_t m = golden.path.assets.size();
  std::vector<std::string> header{"t", "N_t", "X_t", "C"};
  for (std::size_t j = 1; j <= m; ++j) header.push_back("S" + std::to_string(j));
  write_csv_row(out, header);

  const auto counts = golden.path.noise.jump_count_path();
  const auto compound = golden.path.noise.compound_path(s.measure);
  for (std::size_t i = 0; i <= s.grid.steps(); ++i) {
    std::vector<std::string> row{format_double(s.grid.time(i)), std::to_string(counts[i]),
                                 format_double(compound[i]), format_double(golden.path.contract.values[i])};
    for (const auto& a : golden.path.assets) row.push_back(format_double(a.values[i]));
    write_csv_row(out, row);
  }
}

void write_path_summary_csv(std::ostream& out, const ScenarioResult& result) {
  write_csv_row(out, {"path", "terminal_deviation", "squared_deviation", "residual_sum", "residual_sum_sq",
                      "max_abs_residual"});
  for (const auto& p : result.paths) {
    write_csv_row(out, {std::to_string(p.path_index), format_double(p.terminal_deviation),
                        format_double(p.terminal_deviation * p.terminal_deviation), format_double(p.residual_sum),
                        format_double(p.residual_sum_sq), format_double(p.max_abs_residual)});
  }
}

}  // namespace levyhedge::sim
