#include "cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "cli/config.hpp"
#include "levyhedge/errors.hpp"
#include "levyhedge/hedging/gram.hpp"
#include "levyhedge/sim/csv.hpp"
#include "levyhedge/sim/run.hpp"
#include "levyhedge/sim/verify.hpp"

namespace levyhedge::cli {

namespace fs = std::filesystem;
using sim::format_double;

namespace {

void apply(const Overrides& o, sim::Scenario& s) {
  if (o.seed) s.seed = *o.seed;
  if (o.paths) {
    if (*o.paths == 0) throw ConfigError("--paths must be >= 1");
    s.n_paths = *o.paths;
  }
  if (o.steps) {
    if (*o.steps == 0) throw ConfigError("--steps must be >= 1");
    s.grid = levy::TimeGrid(s.grid.horizon(), *o.steps);
  }
}

fs::path make_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir + "': " + ec.message());
  return fs::path(dir);
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  body(file);
  file.flush();
  if (!file) throw IoError("write to '" + path.string() + "' failed");
}

/// Gram system of the assets the mode actually uses, at the initial prices.
std::optional<hedging::DegeneracyReport> initial_degeneracy(const sim::Scenario& s) {
  const auto all = s.hedging_asset_specs();
  std::vector<market::AssetSpec> used;
  switch (s.hedge_mode.kind) {
    case sim::HedgeKind::none: return std::nullopt;
    case sim::HedgeKind::single: used = {all[s.hedge_mode.asset]}; break;
    case sim::HedgeKind::two_asset: used = {all[0], all[1]}; break;
    case sim::HedgeKind::multi: used = all; break;
  }
  std::vector<double> prices;
  for (const auto& a : used) prices.push_back(a.initial_price);
  const auto contract = s.contract_asset();
  return hedging::degeneracy_check(hedging::gram_system(contract, used, contract.initial_price, prices, s.measure));
}

void print_report(std::ostream& out, const hedging::DegeneracyReport& r) {
  out << "degeneracy: min_eigenvalue=" << format_double(r.min_eigenvalue)
      << " max_eigenvalue=" << format_double(r.max_eigenvalue)
      << " condition_number=" << format_double(r.condition_number) << " threshold=" << format_double(r.threshold)
      << " degenerate=" << (r.degenerate ? "yes" : "no") << '\n';
}

std::string mode_label(const sim::HedgeMode& m) {
  std::string label(sim::to_string(m.kind));
  if (m.kind == sim::HedgeKind::single) label += " (asset " + std::to_string(m.asset + 1) + ")";
  return label;
}

}  // namespace

int cmd_figures(const std::vector<std::string>& names, const Overrides& o, std::ostream& out) {
  std::vector<std::string> list = names;
  if (list.empty())
    for (auto n : sim::builtin_scenario_names()) list.emplace_back(n);

  std::vector<sim::Scenario> scenarios;
  for (const auto& name : list) {
    auto s = sim::builtin_scenario(name);
    s.n_paths = 1;
    apply(o, s);
    scenarios.push_back(std::move(s));
  }
  const auto dir = make_dir(o.out_dir.value_or("."));
  for (const auto& s : scenarios) {
    const auto result = sim::run_scenario(s);
    const auto path = dir / (s.name + ".csv");
    write_file(path, [&](std::ostream& f) {
      if (s.hedge_mode.kind == sim::HedgeKind::none)
        sim::write_market_csv(f, s, result.golden);
      else
        sim::write_hedge_csv(f, s, result.golden);
    });
    out << "wrote " << path.string() << '\n';
  }
  return ExitCode::ok;
}

int cmd_hedge(const std::string& config_path, const Overrides& o, std::ostream& out) {
  auto cfg = load_run_config(config_path);
  auto& s = cfg.scenario;
  apply(o, s);

  const auto report = initial_degeneracy(s);
  if (report && report->degenerate)
    throw hedging::DegeneracyError("hedge: Gram matrix is degenerate at the initial prices", *report);

  const auto ratios = sim::scenario_ratios(s);
  const auto assets = s.hedging_asset_specs();
  const double c0 = s.contract.initial_price;
  out << "scenario: " << s.name << '\n' << "hedge_mode: " << mode_label(s.hedge_mode) << '\n';
  double theta0 = 0.0;
  for (std::size_t j = 0; j < ratios.size(); ++j) {
    const double phi = ratios[j] * c0 / assets[j].initial_price;
    theta0 += phi * assets[j].initial_price;
    out << "ratio" << j + 1 << ": " << format_double(ratios[j]) << '\n';
    out << "phi" << j + 1 << ": " << format_double(phi) << '\n';
  }
  out << "theta0: " << format_double(theta0) << '\n';

  s.n_paths = 1;
  const auto result = sim::run_scenario(s);
  if (result.rho) out << "rho: " << format_double(*result.rho) << '\n';
  out << "delta_analytic: " << format_double(result.delta_analytic) << '\n';
  if (report) print_report(out, *report);

  if (o.out_dir) {
    const auto path = make_dir(*o.out_dir) / "hedge.csv";
    write_file(path, [&](std::ostream& f) { sim::write_hedge_csv(f, s, result.golden); });
    out << "wrote " << path.string() << '\n';
  }
  return ExitCode::ok;
}

int cmd_simulate(const std::string& config_path, const Overrides& o, std::ostream& out) {
  auto cfg = load_run_config(config_path);
  apply(o, cfg.scenario);
  if (o.out_dir) cfg.output_dir = *o.out_dir;
  const auto& s = cfg.scenario;

  const auto result = sim::run_scenario(s);
  const auto dir = make_dir(cfg.output_dir);
  write_file(dir / "paths.csv", [&](std::ostream& f) { sim::write_path_summary_csv(f, result); });
  write_file(dir / "hedge.csv", [&](std::ostream& f) { sim::write_hedge_csv(f, s, result.golden); });
  write_file(dir / "market.csv", [&](std::ostream& f) { sim::write_market_csv(f, s, result.golden); });
  write_file(dir / "effective_config.json", [&](std::ostream& f) { f << to_json(cfg).dump(2) << '\n'; });

  const auto& a = result.aggregate;
  out << "scenario: " << s.name << '\n'
      << "hedge_mode: " << mode_label(s.hedge_mode) << '\n'
      << "paths: " << a.paths << '\n'
      << "steps: " << a.steps << '\n';
  for (std::size_t j = 0; j < result.ratios.size(); ++j)
    out << "ratio" << j + 1 << ": " << format_double(result.ratios[j]) << '\n';
  if (result.rho) out << "rho: " << format_double(*result.rho) << '\n';
  out << "delta_analytic: " << format_double(result.delta_analytic) << '\n'
      << "delta_mc: " << format_double(a.delta_mc) << '\n'
      << "delta_mc_stderr: " << format_double(a.delta_mc_stderr) << '\n'
      << "per_step_std: " << format_double(a.per_step_std) << '\n'
      << "max_abs_residual: " << format_double(a.max_abs_residual) << '\n'
      << "wrote " << dir.string() << '\n';
  return ExitCode::ok;
}

int cmd_verify(const std::string& suite, const Overrides& o, std::ostream& out) {
  sim::VerifyOptions options;
  if (o.seed) options.seed = *o.seed;
  options.paths = o.paths;
  options.steps = o.steps;
  if ((o.paths && *o.paths == 0) || (o.steps && *o.steps == 0))
    throw ConfigError("--paths and --steps must be >= 1");

  const auto results = sim::run_verify_suite(suite, options);
  std::size_t failed = 0;
  for (const auto& r : results) {
    failed += r.passed ? 0 : 1;
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name << "  " << r.detail << '\n';
  }
  out << results.size() - failed << '/' << results.size() << " properties passed\n";
  return failed == 0 ? ExitCode::ok : ExitCode::property_failure;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratic hedging in Levy-Ito markets"};
  app.require_subcommand(1);

  Overrides o;
  std::uint64_t seed = 0;
  std::size_t paths = 0, steps = 0;
  std::string out_dir, config_path, suite;
  std::vector<std::string> names;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Master random seed");
    cmd->add_option("--paths", paths, "Number of Monte Carlo paths");
    cmd->add_option("--steps", steps, "Number of time steps");
    cmd->add_option("--out", out_dir, "Output directory");
  };

  auto* figures = app.add_subcommand("figures", "Write one CSV per builtin figure scenario");
  figures->add_option("names", names, "fig1 fig2a fig2b fig3 fig4 (default: all)");
  add_common(figures);

  auto* hedge = app.add_subcommand("hedge", "Print the optimal hedge for a configured scenario");
  hedge->add_option("--config", config_path, "Run config (JSON)")->required();
  add_common(hedge);

  auto* simulate = app.add_subcommand("simulate", "Simulate and hedge a configured scenario");
  simulate->add_option("--config", config_path, "Run config (JSON)")->required();
  add_common(simulate);

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite, "isometry, martingale, calculus, optimality, ordering, completeness or all")
      ->required();
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::config_error;
  }

  auto* active = app.get_subcommands().front();
  if (active->count("--seed")) o.seed = seed;
  if (active->count("--paths")) o.paths = paths;
  if (active->count("--steps")) o.steps = steps;
  if (active->count("--out")) o.out_dir = out_dir;

  try {
    if (active == figures) return cmd_figures(names, o, out);
    if (active == hedge) return cmd_hedge(config_path, o, out);
    if (active == simulate) return cmd_simulate(config_path, o, out);
    return cmd_verify(suite, o, out);
  } catch (const hedging::DegeneracyError& e) {
    err << "error: " << e.what() << '\n';
    std::ostringstream report;
    print_report(report, e.report());
    err << report.str();
    return ExitCode::degeneracy;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::io_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::config_error;
  }
}

}  // namespace levyhedge::cli
