#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "levyhedge/errors.hpp"
#include "levyhedge/sim/scenario.hpp"

namespace levyhedge::cli {

inline constexpr std::string_view kSchema = "levyhedge.run/1";

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// A scenario plus where and how loudly to report it.
struct RunConfig {
  sim::Scenario scenario;
  std::string output_dir = "out";
  int verbosity = 0;
};

/// Validates against the schema: the "schema" field must equal kSchema and
/// unknown keys are rejected at every level. An optional "scenario" field
/// names a builtin to start from; other fields override it.
RunConfig parse_run_config(const nlohmann::json& doc);
RunConfig load_run_config(const std::filesystem::path& path);

/// Fully explicit form that parses back to the same RunConfig.
nlohmann::json to_json(const RunConfig& config);

}  // namespace levyhedge::cli
