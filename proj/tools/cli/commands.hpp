#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace levyhedge::cli {

enum ExitCode : int { ok = 0, config_error = 2, degeneracy = 3, property_failure = 4, io_error = 5 };

/// Command-line overrides shared by every subcommand.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> paths;
  std::optional<std::size_t> steps;
  std::optional<std::string> out_dir;
};

int cmd_figures(const std::vector<std::string>& names, const Overrides& o, std::ostream& out);
int cmd_hedge(const std::string& config_path, const Overrides& o, std::ostream& out);
int cmd_simulate(const std::string& config_path, const Overrides& o, std::ostream& out);
int cmd_verify(const std::string& suite, const Overrides& o, std::ostream& out);

/// Parses argv, dispatches, and maps exceptions to exit codes with a message on err.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace levyhedge::cli
