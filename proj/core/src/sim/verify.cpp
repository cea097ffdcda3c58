#include "levyhedge/sim/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "levyhedge/errors.hpp"
#include "levyhedge/hedging/coefficients.hpp"
#include "levyhedge/hedging/delta.hpp"
#include "levyhedge/hedging/gram.hpp"
#include "levyhedge/levy/calculus.hpp"
#include "levyhedge/levy/integrate.hpp"
#include "levyhedge/levy/rng.hpp"
#include "levyhedge/market/asset.hpp"
#include "levyhedge/market/kernel.hpp"
#include "levyhedge/sim/brute_force.hpp"
#include "levyhedge/sim/run.hpp"
#include "levyhedge/sim/stats.hpp"

namespace levyhedge::sim {

namespace {

using levy::LevyMeasure;
using levy::NoiseRealization;
using levy::PathSeries;
using levy::SymmetricCoefficients;
using levy::TimeGrid;

constexpr std::array<std::string_view, 6> kSuites{"isometry", "martingale", "calculus",
                                                  "optimality", "ordering", "completeness"};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

/// Parameter draws for randomized properties; seeded apart from the path noise.
class Draws {
 public:
  Draws(std::uint64_t seed, std::uint64_t tag) : rng_(levy::substream_seed(seed, tag, 0x5EED)) {}

  double uniform(double lo, double hi) { return lo + (hi - lo) * rng_.uniform(); }

  LevyMeasure bernoulli() {
    return LevyMeasure::bernoulli(uniform(2.0, 30.0), uniform(0.1, 0.9), uniform(0.2, 1.5), uniform(-1.5, -0.2));
  }

  market::GeometricBernoulliSpec asset() { return {uniform(50.0, 150.0), uniform(0.0, 0.5), uniform(-1.0, 1.0)}; }

 private:
  levy::RandomStream rng_;
};

SymmetricCoefficients log_driver(const market::GeometricBernoulliSpec& spec, const LevyMeasure& measure) {
  SymmetricCoefficients c{0.0, spec.brownian_vol, {}};
  for (const auto& a : measure.atoms()) c.jump_vol.push_back(spec.jump_exponent * a.location);
  return c;
}

double max_relative_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]) / std::max(1.0, std::abs(b[i])));
  return worst;
}

double sup_gap(const PathSeries& a, const PathSeries& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  return worst;
}

/// Sums adjacent pairs of steps, so both grids see the same Brownian and Poisson paths.
NoiseRealization coarsen(const NoiseRealization& fine) {
  const std::size_t n = fine.steps() / 2;
  const auto inc = fine.brownian_increments();
  std::vector<double> b(n);
  std::vector<std::vector<std::uint32_t>> counts(n, std::vector<std::uint32_t>(fine.atom_count(), 0));
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = inc[2 * i] + inc[2 * i + 1];
    for (std::size_t k = 0; k < fine.atom_count(); ++k)
      counts[i][k] = fine.count(2 * i, k) + fine.count(2 * i + 1, k);
  }
  return NoiseRealization::from_counts(std::move(b), counts, fine.atom_count());
}

std::vector<PropertyResult> isometry_suite(const VerifyOptions& o) {
  const auto fig = builtin_scenario("fig1");
  const std::size_t n = o.paths.value_or(10000);
  const TimeGrid grid(1.0, o.steps.value_or(1000));
  const auto driver = log_driver(fig.hedging_assets[0], fig.measure);

  double analytic = driver.brownian_vol * driver.brownian_vol;
  for (std::size_t k = 0; k < fig.measure.size(); ++k)
    analytic += driver.jump_vol[k] * driver.jump_vol[k] * fig.measure.intensity(k);
  analytic *= grid.horizon();

  std::vector<double> sq(n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto noise = levy::sample_noise(fig.measure, grid, o.seed, p);
    const double d = levy::integrate(driver, fig.measure, noise, grid, 0.0).terminal();
    sq[p] = d * d;
  }
  const auto st = sample_stats(sq);
  const double z = st.z_score(analytic);
  return {{"isometry", "asset1_log_driver_second_moment", z <= 3.0,
           fmt("paths=%zu MC=%.6f analytic=%.6f |MC-analytic|/analytic=%.3e z=%.2f", n, st.mean, analytic,
               std::abs(st.mean - analytic) / analytic, z)}};
}

std::vector<PropertyResult> martingale_suite(const VerifyOptions& o) {
  const auto fig = builtin_scenario("fig1");
  const std::size_t n = o.paths.value_or(10000);
  const TimeGrid grid(1.0, o.steps.value_or(1000));
  const auto driver = log_driver(fig.hedging_assets[0], fig.measure);

  std::vector<market::AssetSpec> assets{fig.hedging_asset_specs()[0], fig.hedging_asset_specs()[1],
                                        fig.contract_asset()};
  const std::array<std::string, 3> labels{"S1", "S2", "C"};

  // Domestic pricing under a kernel with nonzero short rate and risk premia.
  const market::PricingKernelSpec kernel{0.05, 0.3, {0.2, -0.15}};
  const auto domestic = market::from_natural(assets[0], kernel);
  const auto domestic_coeffs = market::domestic_coefficients(domestic, kernel, fig.measure);

  std::vector<double> driver_terminal(n);
  std::vector<std::vector<double>> terminal(assets.size(), std::vector<double>(n));
  std::vector<double> deflated(n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto noise = levy::sample_noise(fig.measure, grid, o.seed, p);
    driver_terminal[p] = levy::integrate(driver, fig.measure, noise, grid, 0.0).terminal();
    for (std::size_t j = 0; j < assets.size(); ++j)
      terminal[j][p] = market::geometric_price_path(assets[j], fig.measure, noise, grid).terminal();
    const double pi_t = market::kernel_path(kernel, fig.measure, noise, grid).terminal();
    const double s_t = levy::geometric_path(domestic_coeffs, fig.measure, noise, grid, domestic.initial_price).terminal();
    deflated[p] = pi_t * s_t;
  }

  std::vector<PropertyResult> out;
  auto check = [&](std::string name, const std::vector<double>& xs, double target) {
    const auto st = sample_stats(xs);
    const double z = st.z_score(target);
    out.push_back({"martingale", std::move(name), z <= 3.0,
                   fmt("paths=%zu mean=%.6f target=%.6f se=%.3e z=%.2f", n, st.mean, target, st.std_error, z)});
  };
  check("driftless_integral_mean", driver_terminal, 0.0);
  for (std::size_t j = 0; j < assets.size(); ++j)
    check("natural_price_mean_" + labels[j], terminal[j], assets[j].initial_price);
  check("deflated_domestic_price_mean", deflated, domestic.initial_price);
  return out;
}

std::vector<PropertyResult> calculus_suite(const VerifyOptions& o) {
  const std::size_t n = o.paths.value_or(100);
  const std::size_t steps = o.steps.value_or(1000);
  const TimeGrid grid(1.0, steps);
  std::vector<PropertyResult> out;

  {
    Draws draws(o.seed, 1);
    double worst = 0.0;
    for (std::size_t d = 0; d < 100; ++d) {
      const auto measure = draws.bernoulli();
      market::PricingKernelSpec kernel{draws.uniform(-0.05, 0.1), draws.uniform(-1.0, 1.0), {}};
      for (std::size_t k = 0; k < measure.size(); ++k) kernel.jump_mpr.push_back(draws.uniform(-1.5, 0.9));
      const auto noise = levy::sample_noise(measure, grid, o.seed, d);
      const auto pi = market::kernel_path(kernel, measure, noise, grid);
      const auto xi = market::benchmark_path(kernel, measure, noise, grid);
      for (std::size_t i = 0; i < pi.values.size(); ++i) worst = std::max(worst, std::abs(pi.values[i] * xi.values[i] - 1.0));
    }
    out.push_back({"calculus", "kernel_times_benchmark_is_one", worst <= 1e-10,
                   fmt("specs=100 max|pi*xi-1|=%.3e", worst)});
  }

  {
    Draws draws(o.seed, 2);
    double worst_product = 0.0, worst_quotient = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      const auto measure = draws.bernoulli();
      auto coeffs = [&] {
        const auto spec = draws.asset().to_asset(measure);
        auto c = spec.natural_coefficients();
        c.drift = draws.uniform(-0.1, 0.1);
        return c;
      };
      const auto a = coeffs();
      const auto b = coeffs();
      const auto noise = levy::sample_noise(measure, grid, o.seed, p);
      const auto pa = levy::geometric_path(a, measure, noise, grid, 2.0);
      const auto pb = levy::geometric_path(b, measure, noise, grid, 0.5);
      const auto prod = levy::geometric_path(levy::product_coefficients(a, b, measure), measure, noise, grid, 1.0);
      const auto quot = levy::geometric_path(levy::quotient_coefficients(a, b, measure), measure, noise, grid, 4.0);
      std::vector<double> pointwise_prod(pa.values.size()), pointwise_quot(pa.values.size());
      for (std::size_t i = 0; i < pa.values.size(); ++i) {
        pointwise_prod[i] = pa.values[i] * pb.values[i];
        pointwise_quot[i] = pa.values[i] / pb.values[i];
      }
      worst_product = std::max(worst_product, max_relative_gap(prod.values, pointwise_prod));
      worst_quotient = std::max(worst_quotient, max_relative_gap(quot.values, pointwise_quot));
    }
    out.push_back({"calculus", "product_closed_form_matches_pointwise", worst_product <= 1e-10,
                   fmt("paths=%zu max_rel_gap=%.3e", n, worst_product)});
    out.push_back({"calculus", "quotient_closed_form_matches_pointwise", worst_quotient <= 1e-10,
                   fmt("paths=%zu max_rel_gap=%.3e", n, worst_quotient)});
  }

  // Euler against closed form on nested grids: the fig-1 product C*S1 (Brownian
  // and jumps) and a drift-plus-jumps process without Brownian part.
  {
    const auto fig = builtin_scenario("fig1");
    const auto contract = fig.contract_asset().natural_coefficients();
    const auto asset = fig.hedging_asset_specs()[0].natural_coefficients();
    const auto with_brownian = levy::product_coefficients(contract, asset, fig.measure);
    auto jumps_only = with_brownian;
    jumps_only.brownian_vol = 0.0;
    jumps_only.drift = 0.05;

    const TimeGrid coarse(1.0, steps), fine(1.0, 2 * steps);
    auto halving = [&](const SymmetricCoefficients& c, const std::string& name) {
      std::vector<double> gap_coarse(n), gap_fine(n);
      for (std::size_t p = 0; p < n; ++p) {
        const auto noise_fine = levy::sample_noise(fig.measure, fine, o.seed, p);
        const auto noise_coarse = coarsen(noise_fine);
        gap_coarse[p] = sup_gap(levy::integrate_proportional(c, fig.measure, noise_coarse, coarse, 1e4),
                                levy::geometric_path(c, fig.measure, noise_coarse, coarse, 1e4));
        gap_fine[p] = sup_gap(levy::integrate_proportional(c, fig.measure, noise_fine, fine, 1e4),
                              levy::geometric_path(c, fig.measure, noise_fine, fine, 1e4));
      }
      const double mc = median(gap_coarse), mf = median(gap_fine);
      const double ratio = mc / mf;
      out.push_back({"calculus", name, ratio >= 2.0,
                     fmt("paths=%zu steps=%zu->%zu median_sup_gap=%.4e->%.4e ratio=%.3f (need >= 2)", n, steps,
                         2 * steps, mc, mf, ratio)});
    };
    halving(with_brownian, "euler_gap_halves_with_dt_product_C_S1");
    halving(jumps_only, "euler_gap_halves_with_dt_drift_jumps");
  }
  return out;
}

std::vector<PropertyResult> optimality_suite(const VerifyOptions& o) {
  const std::size_t steps = o.steps.value_or(1000);
  std::vector<PropertyResult> out;

  {
    Draws draws(o.seed, 3);
    std::size_t argmin_fail = 0, convex_fail = 0, accepted = 0;
    double worst_gap = 0.0, worst_rho = 0.0, worst_step = 0.0;
    bool rho_in_range = true;
    while (accepted < 100) {
      Scenario s;
      s.name = "random_single";
      s.measure = draws.bernoulli();
      s.contract = draws.asset();
      s.hedging_assets = {draws.asset()};
      s.hedge_mode = HedgeMode::single(0);
      s.grid = TimeGrid(draws.uniform(0.25, 2.0), steps);
      const auto contract = s.contract_asset();
      const auto asset = s.hedging_asset_specs()[0];
      const auto k = hedging::single_coefficients(contract, asset, s.measure);
      if (k.M <= hedging::kDegeneracyTolerance * (k.M + k.K)) continue;
      const double phi = k.L / k.M;
      if (std::abs(phi) > 4.0) continue;
      ++accepted;

      const auto bf = brute_force_constant_hedge(s, {-5.0, 5.0, 1e-3});
      const double step_err = std::abs(bf.best_ratios[0] - phi);
      worst_step = std::max(worst_step, step_err);
      if (step_err > 1e-3 * (1.0 + 1e-9)) ++argmin_fail;

      const std::array<market::AssetSpec, 1> assets{asset};
      const double T = s.grid.horizon();
      auto delta = [&](double r) { return hedging::analytic_delta(contract, assets, std::array{r}, s.measure, T); };
      const double d0 = delta(phi);
      const double h = 1e-3;
      if (!(delta(phi + h) + delta(phi - h) - 2.0 * d0 > 0.0) || delta(phi + h) < d0 || delta(phi - h) < d0)
        ++convex_fail;

      const double exposure = hedging::contract_exposure(contract, s.measure, T);
      for (double off : {-1.0, -0.5, -0.1, 0.1, 0.5, 1.0}) {
        const double lhs = delta(phi + off) - d0;
        const double rhs = exposure * k.M * off * off;
        worst_gap = std::max(worst_gap, std::abs(lhs - rhs) / std::max(1.0, delta(phi + off)));
      }

      const double rho = hedging::rho_diagnostic(contract, asset, s.measure);
      rho_in_range = rho_in_range && rho >= 0.0 && rho <= 1.0;
      const double unhedged = delta(0.0);
      worst_rho = std::max(worst_rho, std::abs(d0 - (1.0 - rho) * unhedged) / std::max(1.0, unhedged));
    }
    out.push_back({"optimality", "single_asset_argmin_brute_force", argmin_fail == 0,
                   fmt("specs=100 grid=[-5,5] step=1e-3 failures=%zu max|grid-L/M|=%.3e", argmin_fail, worst_step)});
    out.push_back({"optimality", "single_asset_strict_convexity", convex_fail == 0,
                   fmt("specs=100 failures=%zu", convex_fail)});
    out.push_back({"optimality", "optimality_gap_identity", worst_gap <= 1e-10,
                   fmt("specs=100 offsets=6 max_rel_err=%.3e", worst_gap)});
    out.push_back({"optimality", "rho_bounds_and_unhedged_identity", rho_in_range && worst_rho <= 1e-10,
                   fmt("specs=100 rho_in_[0,1]=%s max_rel_err=%.3e", rho_in_range ? "yes" : "no", worst_rho)});
  }

  {
    Draws draws(o.seed, 4);
    std::size_t tested = 0, filtered = 0, mismatches = 0;
    double worst = 0.0;
    while (tested < 1000) {
      const auto measure = draws.bernoulli();
      const auto contract = draws.asset().to_asset(measure);
      const std::array<market::AssetSpec, 2> assets{draws.asset().to_asset(measure), draws.asset().to_asset(measure)};
      const std::array<double, 2> prices{draws.uniform(50.0, 150.0), draws.uniform(50.0, 150.0)};
      const double c = draws.uniform(50.0, 150.0);
      const auto system = hedging::gram_system(contract, assets, c, prices, measure);
      if (hedging::degeneracy_check(system).degenerate) {
        ++filtered;
        continue;
      }
      ++tested;
      try {
        const auto phi5 = hedging::multi_asset_hedge(system);
        const auto phi7 = hedging::two_asset_hedge(contract, assets[0], assets[1], {c, prices[0], prices[1]}, measure);
        const double scale = std::max({1.0, std::abs(phi5[0]), std::abs(phi5[1])});
        const double err = std::max(std::abs(phi5[0] - phi7[0]), std::abs(phi5[1] - phi7[1])) / scale;
        worst = std::max(worst, err);
        if (err > 1e-10) ++mismatches;
      } catch (const hedging::DegeneracyError&) {
        ++mismatches;
      }
    }
    out.push_back({"optimality", "two_asset_closed_form_matches_gram_solve", mismatches == 0,
                   fmt("draws=1000 filtered_degenerate=%zu mismatches=%zu max_rel_err=%.3e", filtered, mismatches,
                       worst)});
  }

  {
    auto fig2a = builtin_scenario("fig2a");
    fig2a.grid = TimeGrid(1.0, steps);
    const double phi = scenario_ratios(fig2a)[0];
    const auto bf1 = brute_force_constant_hedge(fig2a, {0.0, 2.0, 1e-3});
    const double err1 = std::abs(bf1.best_ratios[0] - phi);
    out.push_back({"optimality", "fig2a_brute_force_matches_L_over_M", err1 <= 1e-3 * (1.0 + 1e-9),
                   fmt("L/M=%.6f grid=%.3f |diff|=%.3e", phi, bf1.best_ratios[0], err1)});

    auto fig3 = builtin_scenario("fig3");
    fig3.grid = TimeGrid(1.0, steps);
    const auto ratios = scenario_ratios(fig3);
    const auto bf2 = brute_force_constant_hedge(fig3, {0.0, 1.0, 1e-3});
    const double err2 = std::max(std::abs(bf2.best_ratios[0] - ratios[0]), std::abs(bf2.best_ratios[1] - ratios[1]));
    out.push_back({"optimality", "fig3_brute_force_matches_two_asset_ratios", err2 <= 1e-3 * (1.0 + 1e-9),
                   fmt("closed_form=(%.6f, %.6f) grid=(%.3f, %.3f) max|diff|=%.3e", ratios[0], ratios[1],
                       bf2.best_ratios[0], bf2.best_ratios[1], err2)});
  }
  return out;
}

Scenario sized(std::string_view name, const VerifyOptions& o, std::size_t default_paths) {
  auto s = builtin_scenario(name);
  s.seed = o.seed;
  s.n_paths = o.paths.value_or(default_paths);
  s.grid = TimeGrid(1.0, o.steps.value_or(1000));
  return s;
}

std::vector<PropertyResult> ordering_suite(const VerifyOptions& o) {
  const auto r2a = run_scenario(sized("fig2a", o, 1000));
  const auto r2b = run_scenario(sized("fig2b", o, 1000));
  const auto r3 = run_scenario(sized("fig3", o, 1000));
  std::vector<PropertyResult> out;

  const double best_single = std::min(r2a.delta_analytic, r2b.delta_analytic);
  out.push_back({"ordering", "analytic_two_asset_below_single", r3.delta_analytic < best_single,
                 fmt("delta(two)=%.6g delta(S1)=%.6g delta(S2)=%.6g", r3.delta_analytic, r2a.delta_analytic,
                     r2b.delta_analytic)});

  auto separation = [&](const ScenarioResult& single) {
    const auto& a = single.aggregate;
    const auto& b = r3.aggregate;
    const double se = std::hypot(a.delta_mc_stderr, b.delta_mc_stderr);
    return (a.delta_mc - b.delta_mc) / se;
  };
  const double sep_a = separation(r2a), sep_b = separation(r2b);
  out.push_back({"ordering", "monte_carlo_two_asset_below_single", sep_a >= 3.0 && sep_b >= 3.0,
                 fmt("paths=%zu MC delta(two)=%.4g+-%.2g delta(S1)=%.4g+-%.2g delta(S2)=%.4g+-%.2g sep=(%.1f, %.1f) SE",
                     r3.aggregate.paths, r3.aggregate.delta_mc, r3.aggregate.delta_mc_stderr, r2a.aggregate.delta_mc,
                     r2a.aggregate.delta_mc_stderr, r2b.aggregate.delta_mc, r2b.aggregate.delta_mc_stderr, sep_a,
                     sep_b)});

  const double s3 = r3.aggregate.per_step_std;
  out.push_back({"ordering", "per_step_residual_std_smallest_for_two_asset",
                 s3 < r2a.aggregate.per_step_std && s3 < r2b.aggregate.per_step_std,
                 fmt("std(two)=%.5g std(S1)=%.5g std(S2)=%.5g", s3, r2a.aggregate.per_step_std,
                     r2b.aggregate.per_step_std)});

  double worst_z = 0.0;
  std::string detail;
  for (const auto* r : {&r2a, &r2b, &r3}) {
    const double z = std::abs(r->aggregate.delta_mc - r->delta_analytic) / r->aggregate.delta_mc_stderr;
    worst_z = std::max(worst_z, z);
    detail += fmt("%s: MC=%.5g analytic=%.5g z=%.2f; ", r->name.c_str(), r->aggregate.delta_mc, r->delta_analytic, z);
  }
  out.push_back({"ordering", "monte_carlo_delta_matches_analytic", worst_z <= 3.0, detail});
  return out;
}

std::vector<PropertyResult> completeness_suite(const VerifyOptions& o) {
  std::vector<PropertyResult> out;
  auto exact_case = [&](std::string name, Scenario s) {
    s.seed = o.seed;
    s.n_paths = o.paths.value_or(100);
    s.grid = TimeGrid(1.0, o.steps.value_or(1000));
    const auto r = run_scenario(s);
    const double limit = 1e-9 * s.contract.initial_price;
    out.push_back({"completeness", std::move(name), r.aggregate.max_abs_residual <= limit,
                   fmt("paths=%zu max|dV|=%.3e limit=%.1e", r.aggregate.paths, r.aggregate.max_abs_residual, limit)});
  };

  {
    Scenario s;
    s.name = "pure_poisson";
    s.measure = LevyMeasure({{1.0, 15.0}});
    s.contract = {100.0, 0.0, 0.25};
    s.hedging_assets = {{100.0, 0.0, 0.30}};
    s.hedge_mode = HedgeMode::single(0);
    exact_case("pure_poisson_single_asset_zero_residual", s);
  }
  {
    auto s = builtin_scenario("fig3");
    s.name = "pure_bernoulli";
    s.contract.brownian_vol = 0.0;
    for (auto& a : s.hedging_assets) a.brownian_vol = 0.0;
    exact_case("pure_bernoulli_two_asset_zero_residual", s);
  }
  {
    Scenario s;
    s.name = "brownian";
    s.contract = {100.0, 0.15, 0.0};
    s.hedging_assets = {{100.0, 0.20, 0.0}};
    s.hedge_mode = HedgeMode::single(0);
    exact_case("brownian_single_asset_zero_residual", s);
  }

  {
    const auto r3 = run_scenario(sized("fig3", o, 1000));
    const auto r4 = run_scenario(sized("fig4", o, 1000));
    const double ratio = r4.aggregate.per_step_std / r3.aggregate.per_step_std;
    out.push_back({"completeness", "fig4_near_perfect_hedge", ratio <= 0.1,
                   fmt("paths=%zu std(fig4)=%.5g std(fig3)=%.5g ratio=%.4f (need <= 0.1)", r4.aggregate.paths,
                       r4.aggregate.per_step_std, r3.aggregate.per_step_std, ratio)});

    const auto& g = r3.golden;
    const double err = hedging::self_financing_error(g.report, g.path.contract, g.path.assets);
    out.push_back({"completeness", "self_financing_consistency", err <= 1e-9, fmt("max_rel_err=%.3e", err)});
  }
  return out;
}

}  // namespace

std::span<const std::string_view> verify_suite_names() { return kSuites; }

std::vector<PropertyResult> run_verify_suite(std::string_view suite, const VerifyOptions& options) {
  if (suite == "all") {
    std::vector<PropertyResult> all;
    for (auto name : kSuites) {
      auto part = run_verify_suite(name, options);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (suite == "isometry") return isometry_suite(options);
  if (suite == "martingale") return martingale_suite(options);
  if (suite == "calculus") return calculus_suite(options);
  if (suite == "optimality") return optimality_suite(options);
  if (suite == "ordering") return ordering_suite(options);
  if (suite == "completeness") return completeness_suite(options);
  throw ArgumentError("unknown verify suite '" + std::string(suite) + "'");
}

}  // namespace levyhedge::sim
