#include "cli/config.hpp"

#include <fstream>
#include <initializer_list>

namespace levyhedge::cli {

using nlohmann::json;

namespace {

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError("config: " + where + " must be an object");
}

void reject_unknown(const json& j, const std::string& where, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw ConfigError("config: unknown key '" + key + "' in " + where);
  }
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ConfigError("config: " + where + " must be a number");
  return j.get<double>();
}

std::uint64_t count(const json& j, const std::string& where, std::uint64_t min) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw ConfigError("config: " + where + " must be a non-negative integer");
  const auto v = j.get<std::uint64_t>();
  if (v < min) throw ConfigError("config: " + where + " must be >= " + std::to_string(min));
  return v;
}

std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) throw ConfigError("config: " + where + " must be a string");
  return j.get<std::string>();
}

levy::LevyMeasure parse_measure(const json& j) {
  require_object(j, "measure");
  reject_unknown(j, "measure", {"bernoulli", "atoms"});
  if (j.size() != 1) throw ConfigError("config: measure needs exactly one of 'bernoulli' or 'atoms'");
  if (j.contains("bernoulli")) {
    const auto& b = j["bernoulli"];
    require_object(b, "measure.bernoulli");
    reject_unknown(b, "measure.bernoulli", {"rate", "p", "g", "h"});
    for (auto key : {"rate", "p", "g", "h"})
      if (!b.contains(key)) throw ConfigError(std::string("config: measure.bernoulli.") + key + " is required");
    return levy::LevyMeasure::bernoulli(number(b["rate"], "measure.bernoulli.rate"), number(b["p"], "measure.bernoulli.p"),
                                        number(b["g"], "measure.bernoulli.g"), number(b["h"], "measure.bernoulli.h"));
  }
  const auto& atoms = j["atoms"];
  if (!atoms.is_array()) throw ConfigError("config: measure.atoms must be an array");
  std::vector<levy::JumpAtom> out;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const std::string where = "measure.atoms[" + std::to_string(k) + "]";
    require_object(atoms[k], where);
    reject_unknown(atoms[k], where, {"location", "intensity"});
    if (!atoms[k].contains("location") || !atoms[k].contains("intensity"))
      throw ConfigError("config: " + where + " needs location and intensity");
    out.push_back({number(atoms[k]["location"], where + ".location"), number(atoms[k]["intensity"], where + ".intensity")});
  }
  return levy::LevyMeasure(std::move(out));
}

market::GeometricBernoulliSpec parse_asset(const json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown(j, where, {"initial_price", "brownian_vol", "jump_exponent"});
  market::GeometricBernoulliSpec spec;
  if (j.contains("initial_price")) spec.initial_price = number(j["initial_price"], where + ".initial_price");
  if (!j.contains("brownian_vol") || !j.contains("jump_exponent"))
    throw ConfigError("config: " + where + " needs brownian_vol and jump_exponent");
  spec.brownian_vol = number(j["brownian_vol"], where + ".brownian_vol");
  spec.jump_exponent = number(j["jump_exponent"], where + ".jump_exponent");
  return spec;
}

market::PricingKernelSpec parse_kernel(const json& j) {
  require_object(j, "kernel");
  reject_unknown(j, "kernel", {"short_rate", "brownian_mpr", "jump_mpr"});
  market::PricingKernelSpec k;
  if (j.contains("short_rate")) k.short_rate = number(j["short_rate"], "kernel.short_rate");
  if (j.contains("brownian_mpr")) k.brownian_mpr = number(j["brownian_mpr"], "kernel.brownian_mpr");
  if (j.contains("jump_mpr")) {
    if (!j["jump_mpr"].is_array()) throw ConfigError("config: kernel.jump_mpr must be an array");
    for (const auto& v : j["jump_mpr"]) k.jump_mpr.push_back(number(v, "kernel.jump_mpr[]"));
  }
  return k;
}

sim::HedgeMode parse_hedge_mode(const json& j) {
  if (j.is_string()) {
    const auto kind = sim::parse_hedge_kind(j.get<std::string>());
    if (kind == sim::HedgeKind::single)
      throw ConfigError("config: single hedge_mode needs an object {\"kind\": \"single\", \"asset\": i}");
    return {kind, 0};
  }
  require_object(j, "hedge_mode");
  reject_unknown(j, "hedge_mode", {"kind", "asset"});
  if (!j.contains("kind")) throw ConfigError("config: hedge_mode.kind is required");
  const auto kind = sim::parse_hedge_kind(text(j["kind"], "hedge_mode.kind"));
  if (kind != sim::HedgeKind::single) {
    if (j.contains("asset")) throw ConfigError("config: hedge_mode.asset applies only to single");
    return {kind, 0};
  }
  if (!j.contains("asset")) throw ConfigError("config: hedge_mode.asset is required for single");
  return sim::HedgeMode::single(count(j["asset"], "hedge_mode.asset", 1) - 1);
}

}  // namespace

RunConfig parse_run_config(const json& doc) {
  try {
    require_object(doc, "document");
    reject_unknown(doc, "document",
                   {"schema", "scenario", "name", "measure", "kernel", "contract", "hedging_assets", "horizon", "steps",
                    "paths", "seed", "hedge_mode", "price_scheme", "threads", "output_dir", "verbosity"});
    if (!doc.contains("schema")) throw ConfigError("config: missing 'schema' field");
    if (text(doc["schema"], "schema") != kSchema)
      throw ConfigError("config: unsupported schema '" + doc["schema"].get<std::string>() + "', expected '" +
                        std::string(kSchema) + "'");

    RunConfig cfg;
    auto& s = cfg.scenario;
    if (doc.contains("scenario")) s = sim::builtin_scenario(text(doc["scenario"], "scenario"));
    if (doc.contains("name")) s.name = text(doc["name"], "name");
    if (s.name.empty()) s.name = "custom";
    if (doc.contains("measure")) s.measure = parse_measure(doc["measure"]);
    if (doc.contains("kernel")) {
      s.kernel = parse_kernel(doc["kernel"]);
      if (s.kernel->jump_mpr.empty()) s.kernel->jump_mpr.assign(s.measure.size(), 0.0);
    }
    if (doc.contains("contract")) s.contract = parse_asset(doc["contract"], "contract");
    if (doc.contains("hedging_assets")) {
      const auto& arr = doc["hedging_assets"];
      if (!arr.is_array()) throw ConfigError("config: hedging_assets must be an array");
      s.hedging_assets.clear();
      for (std::size_t i = 0; i < arr.size(); ++i)
        s.hedging_assets.push_back(parse_asset(arr[i], "hedging_assets[" + std::to_string(i) + "]"));
    }
    double horizon = s.grid.horizon();
    std::size_t steps = s.grid.steps();
    if (doc.contains("horizon")) horizon = number(doc["horizon"], "horizon");
    if (doc.contains("steps")) steps = count(doc["steps"], "steps", 1);
    s.grid = levy::TimeGrid(horizon, steps);
    if (doc.contains("paths")) s.n_paths = count(doc["paths"], "paths", 1);
    if (doc.contains("seed")) s.seed = count(doc["seed"], "seed", 0);
    if (doc.contains("hedge_mode")) s.hedge_mode = parse_hedge_mode(doc["hedge_mode"]);
    if (doc.contains("price_scheme")) s.price_scheme = sim::parse_price_scheme(text(doc["price_scheme"], "price_scheme"));
    if (doc.contains("threads")) s.threads = count(doc["threads"], "threads", 0);
    if (doc.contains("output_dir")) cfg.output_dir = text(doc["output_dir"], "output_dir");
    if (doc.contains("verbosity")) cfg.verbosity = static_cast<int>(count(doc["verbosity"], "verbosity", 0));

    s.validate();
    return cfg;
  } catch (const ConfigError&) {
    throw;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const Error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config: " + path.string() + ": " + e.what());
  }
  return parse_run_config(doc);
}

json to_json(const RunConfig& config) {
  const auto& s = config.scenario;
  auto asset = [](const market::GeometricBernoulliSpec& a) {
    return json{{"initial_price", a.initial_price}, {"brownian_vol", a.brownian_vol}, {"jump_exponent", a.jump_exponent}};
  };
  json atoms = json::array();
  for (const auto& a : s.measure.atoms()) atoms.push_back({{"location", a.location}, {"intensity", a.intensity}});
  json assets = json::array();
  for (const auto& a : s.hedging_assets) assets.push_back(asset(a));
  json mode{{"kind", sim::to_string(s.hedge_mode.kind)}};
  if (s.hedge_mode.kind == sim::HedgeKind::single) mode["asset"] = s.hedge_mode.asset + 1;

  json doc{{"schema", kSchema},
           {"name", s.name},
           {"measure", {{"atoms", atoms}}},
           {"contract", asset(s.contract)},
           {"hedging_assets", assets},
           {"horizon", s.grid.horizon()},
           {"steps", s.grid.steps()},
           {"paths", s.n_paths},
           {"seed", s.seed},
           {"hedge_mode", mode},
           {"price_scheme", sim::to_string(s.price_scheme)},
           {"threads", s.threads},
           {"output_dir", config.output_dir},
           {"verbosity", config.verbosity}};
  if (s.kernel)
    doc["kernel"] = {{"short_rate", s.kernel->short_rate},
                     {"brownian_mpr", s.kernel->brownian_mpr},
                     {"jump_mpr", s.kernel->jump_mpr}};
  return doc;
}

}  // namespace levyhedge::cli
