#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "levyhedge/errors.hpp"
#include "levyhedge/hedging/coefficients.hpp"
#include "levyhedge/hedging/delta.hpp"
#include "levyhedge/hedging/gram.hpp"
#include "levyhedge/hedging/portfolio.hpp"
#include "levyhedge/levy/noise.hpp"
#include "levyhedge/market/asset.hpp"
#include "levyhedge/sim/stats.hpp"

using namespace levyhedge;
using namespace levyhedge::hedging;
using levy::LevyMeasure;
using levy::TimeGrid;
using market::AssetSpec;
using market::GeometricBernoulliSpec;

namespace {

LevyMeasure fig_measure() { return LevyMeasure::bernoulli(15.0, 0.5, 1.0, -1.0); }

struct Fig {
  LevyMeasure m = fig_measure();
  AssetSpec c = GeometricBernoulliSpec{100.0, 0.15, 0.25}.to_asset(m);
  AssetSpec s1 = GeometricBernoulliSpec{100.0, 0.20, 0.30}.to_asset(m);
  AssetSpec s2 = GeometricBernoulliSpec{100.0, 0.10, 0.20}.to_asset(m);
};

void check_close(double a, double b, double tol) { CHECK(std::abs(a - b) <= tol * std::max(1.0, std::abs(b))); }

}  // namespace

TEST_SUITE("hedging.coefficients") {
  TEST_CASE("fig-1 single-asset coefficients") {
    const Fig f;
    const auto k1 = single_coefficients(f.c, f.s1, f.m);
    check_close(k1.K, 0.994496481708516, 1e-13);
    check_close(k1.L, 1.20524700173261, 1e-13);
    check_close(k1.M, 1.46182284976820, 1e-13);
    CHECK(k1.L * k1.L <= k1.K * k1.M);
    check_close(single_asset_hedge(100.0, 100.0, k1), 0.824482256467481, 1e-13);
    check_close(rho_diagnostic(f.c, f.s1, f.m), 0.999203904554807, 1e-13);

    const auto k2 = single_coefficients(f.c, f.s2, f.m);
    check_close(k2.L, 0.787354695859830, 1e-13);
    check_close(k2.M, 0.624082909004546, 1e-13);
    check_close(single_asset_hedge(100.0, 100.0, k2), 1.26161874407955, 1e-13);
    check_close(rho_diagnostic(f.c, f.s2, f.m), 0.998838568869832, 1e-13);
  }

  TEST_CASE("self hedge and brownian cases") {
    const Fig f;
    const auto same = single_coefficients(f.c, f.c, f.m);
    CHECK(same.K == same.L);
    CHECK(same.L == same.M);
    CHECK(single_asset_hedge(80.0, 80.0, same) == doctest::Approx(1.0));
    CHECK(rho_diagnostic(f.c, f.c, f.m) == doctest::Approx(1.0));

    const LevyMeasure none;
    const AssetSpec c{100.0, 0.15, {}}, s{100.0, 0.20, {}};
    const auto k = single_coefficients(c, s, none);
    CHECK(k.K == doctest::Approx(0.0225));
    CHECK(k.L == doctest::Approx(0.03));
    CHECK(k.M == doctest::Approx(0.04));
    CHECK(single_asset_hedge(100.0, 100.0, k) == doctest::Approx(0.75));
    CHECK(rho_diagnostic(c, s, none) == doctest::Approx(1.0));
  }

  TEST_CASE("degenerate hedging asset") {
    const Fig f;
    const AssetSpec flat{100.0, 0.0, {0.0, 0.0}};
    CHECK_THROWS_AS(single_asset_hedge(100.0, 100.0, single_coefficients(f.c, flat, f.m)), DegeneracyError);
    CHECK_THROWS_AS(rho_diagnostic(f.c, flat, f.m), DegeneracyError);
    const std::array<AssetSpec, 1> one{flat};
    const std::array<double, 1> price{100.0};
    CHECK(degeneracy_check(gram_system(f.c, one, 100.0, price, f.m)).degenerate);
  }
}

TEST_SUITE("hedging.gram") {
  TEST_CASE("fig-1 two-asset gram system") {
    const Fig f;
    const std::array<AssetSpec, 2> assets{f.s1, f.s2};
    const std::array<double, 2> prices{100.0, 100.0};
    const auto sys = gram_system(f.c, assets, 100.0, prices, f.m);
    check_close(sys.M(0, 0), 14618.2284976820, 1e-13);
    check_close(sys.M(0, 1), 9533.10431876667, 1e-13);
    check_close(sys.M(1, 0), 9533.10431876667, 1e-13);
    check_close(sys.M(1, 1), 6240.82909004547, 1e-13);
    check_close(sys.F(0), 12052.4700173261, 1e-13);
    check_close(sys.F(1), 7873.54695859830, 1e-13);
    check_close(sys.G, 9944.96481708516, 1e-13);

    const auto rep = degeneracy_check(sys);
    CHECK_FALSE(rep.degenerate);
    check_close(rep.min_eigenvalue, 0.00167826065577708, 1e-10);
    check_close(rep.max_eigenvalue, 2.08422749811697, 1e-12);
    CHECK(rep.condition_number == doctest::Approx(1241.897).epsilon(1e-6));

    const auto phi = multi_asset_hedge(sys);
    check_close(phi(0), 0.451876883184711, 1e-12);
    check_close(phi(1), 0.571359580676056, 1e-12);
    const auto p7 = two_asset_hedge(f.c, f.s1, f.s2, {100.0, 100.0, 100.0}, f.m);
    CHECK(std::abs(p7[0] - phi(0)) < 1e-10);
    CHECK(std::abs(p7[1] - phi(1)) < 1e-10);
  }

  TEST_CASE("n=1 system matches the single-asset coefficients") {
    const Fig f;
    const std::array<AssetSpec, 1> one{f.s1};
    const std::array<double, 1> price{80.0};
    const auto sys = gram_system(f.c, one, 120.0, price, f.m);
    const auto k = single_coefficients(f.c, f.s1, f.m);
    check_close(sys.M(0, 0), 6400.0 * k.M, 1e-14);
    check_close(sys.F(0), 9600.0 * k.L, 1e-14);
    check_close(sys.G, 14400.0 * k.K, 1e-14);
    CHECK(std::abs(multi_asset_hedge(sys)(0) - single_asset_hedge(120.0, 80.0, k)) < 1e-12);
  }

  TEST_CASE("permuting the assets permutes the system") {
    const Fig f;
    const std::array<AssetSpec, 2> ab{f.s1, f.s2}, ba{f.s2, f.s1};
    const std::array<double, 2> pab{90.0, 110.0}, pba{110.0, 90.0};
    const auto x = gram_system(f.c, ab, 100.0, pab, f.m);
    const auto y = gram_system(f.c, ba, 100.0, pba, f.m);
    CHECK(x.M(0, 0) == y.M(1, 1));
    CHECK(x.M(0, 1) == y.M(1, 0));
    CHECK(x.F(0) == y.F(1));
    const auto px = multi_asset_hedge(x), py = multi_asset_hedge(y);
    CHECK(px(0) == doctest::Approx(py(1)).epsilon(1e-12));
  }

  TEST_CASE("replicable contracts") {
    const Fig f;
    const std::array<AssetSpec, 2> first{f.c, f.s1};
    const std::array<double, 2> prices{100.0, 100.0};
    const auto phi = multi_asset_hedge(gram_system(f.c, first, 100.0, prices, f.m));
    CHECK(std::abs(phi(0) - 1.0) < 1e-12);
    CHECK(std::abs(phi(1)) < 1e-12);
    const auto p7 = two_asset_hedge(f.c, f.s1, f.c, {100.0, 100.0, 100.0}, f.m);
    CHECK(std::abs(p7[0]) < 1e-12);
    CHECK(std::abs(p7[1] - 1.0) < 1e-12);
  }

  TEST_CASE("pure-jump bernoulli market is complete") {
    const Fig f;
    auto strip = [](AssetSpec a) {
      a.brownian_vol = 0.0;
      return a;
    };
    const auto c = strip(f.c), s1 = strip(f.s1), s2 = strip(f.s2);
    const auto p = two_asset_hedge(c, s1, s2, {100.0, 100.0, 100.0}, f.m);
    check_close(p[0], 0.416060088915122, 1e-12);
    check_close(p[1], 0.625390267269220, 1e-12);
    // Jump by jump, the hedge reproduces the contract's relative move.
    for (std::size_t k = 0; k < 2; ++k)
      CHECK(std::abs(p[0] * s1.jump_vol[k] + p[1] * s2.jump_vol[k] - c.jump_vol[k]) < 1e-12);
  }

  TEST_CASE("duplicated assets are degenerate") {
    const Fig f;
    const std::array<AssetSpec, 2> dup{f.s1, f.s1};
    const std::array<double, 2> prices{100.0, 100.0};
    const auto sys = gram_system(f.c, dup, 100.0, prices, f.m);
    CHECK(degeneracy_check(sys).degenerate);
    CHECK_THROWS_AS(multi_asset_hedge(sys), DegeneracyError);
    CHECK_THROWS_AS(two_asset_hedge(f.c, f.s1, f.s1, {100.0, 100.0, 100.0}, f.m), DegeneracyError);
    try {
      optimal_ratios(f.c, dup, f.m);
      FAIL("expected DegeneracyError");
    } catch (const DegeneracyError& e) {
      CHECK(e.report().degenerate);
      CHECK(e.report().min_eigenvalue <= e.report().threshold);
    }
  }

  TEST_CASE("dimension mismatches are argument errors") {
    const Fig f;
    const std::array<AssetSpec, 2> assets{f.s1, f.s2};
    const std::array<double, 1> one{100.0};
    CHECK_THROWS_AS(gram_system(f.c, assets, 100.0, one, f.m), ArgumentError);
  }
}

TEST_SUITE("hedging.delta") {
  TEST_CASE("fig-1 analytic errors") {
    const Fig f;
    const std::array<AssetSpec, 2> both{f.s1, f.s2};
    auto delta = [&](double r1, double r2) {
      const std::array<double, 2> r{r1, r2};
      return analytic_delta(f.c, both, r, f.m, 1.0);
    };
    CHECK(delta(0.0, 0.0) == doctest::Approx(17033.628).epsilon(1e-7));
    CHECK(delta(0.824482256467481, 0.0) == doctest::Approx(13.5604).epsilon(1e-5));
    CHECK(delta(0.0, 1.26161874407955) == doctest::Approx(19.7834).epsilon(1e-5));
    CHECK(delta(0.451876883184711, 0.571359580676056) == doctest::Approx(0.181114).epsilon(1e-5));
  }

  TEST_CASE("exposure and closed-form minimum") {
    const Fig f;
    const auto k = single_coefficients(f.c, f.s1, f.m);
    const double exposure = contract_exposure(f.c, f.m, 1.0);
    check_close(exposure, 1e4 * 1.71278917244797, 1e-12);
    const std::array<AssetSpec, 1> one{f.s1};
    const std::array<double, 1> opt{k.L / k.M}, zero{0.0};
    check_close(analytic_delta(f.c, one, opt, f.m, 1.0), exposure * (k.K - k.L * k.L / k.M), 1e-12);
    check_close(analytic_delta(f.c, one, zero, f.m, 1.0), exposure * k.K, 1e-12);
    CHECK(contract_exposure(f.c, f.m, 0.0) == 0.0);
    CHECK(contract_exposure(AssetSpec{3.0, 0.0, {0.0, 0.0}}, f.m, 2.0) == doctest::Approx(18.0));
  }

  TEST_CASE("optimality gap and rho identity") {
    const Fig f;
    const auto k = single_coefficients(f.c, f.s2, f.m);
    const double exposure = contract_exposure(f.c, f.m, 1.0);
    const std::array<AssetSpec, 1> one{f.s2};
    const double phi = k.L / k.M;
    const double d0 = analytic_delta(f.c, one, std::array{phi}, f.m, 1.0);
    for (double off : {-0.7, -0.01, 0.2, 1.5}) {
      const double d = analytic_delta(f.c, one, std::array{phi + off}, f.m, 1.0);
      CHECK(std::abs(d - d0 - exposure * k.M * off * off) <= 1e-10 * std::max(1.0, d));
    }
    const double rho = rho_diagnostic(f.c, f.s2, f.m);
    const double unhedged = analytic_delta(f.c, one, std::array{0.0}, f.m, 1.0);
    CHECK(std::abs(d0 - (1.0 - rho) * unhedged) <= 1e-10 * unhedged);
  }

  TEST_CASE("delta quadratic agrees with analytic_delta") {
    const Fig f;
    const std::array<AssetSpec, 2> both{f.s1, f.s2};
    const auto q = delta_quadratic(f.c, both, f.m, 1.0);
    const std::array<double, 2> r{0.3, 0.8};
    CHECK(q.delta(r) == doctest::Approx(analytic_delta(f.c, both, r, f.m, 1.0)).epsilon(1e-14));
    CHECK(q.rate(r) == doctest::Approx(delta_rate(f.c, both, r, f.m)).epsilon(1e-14));
    CHECK_THROWS_AS(analytic_delta(f.c, both, std::array{0.3}, f.m, 1.0), ArgumentError);
  }
}

TEST_SUITE("hedging.portfolio") {
  TEST_CASE("zero strategy leaves the contract unhedged") {
    const Fig f;
    const TimeGrid grid(1.0, 100);
    const auto noise = levy::sample_noise(f.m, grid, 1, 0);
    const auto c = market::euler_price_path(f.c, f.m, noise, grid);
    const std::vector<levy::PathSeries> assets{market::euler_price_path(f.s1, f.m, noise, grid)};
    const auto rep = evolve_portfolio(c, assets, constant_ratio_rule({0.0}), grid);
    for (std::size_t i = 0; i <= grid.steps(); ++i) CHECK(rep.portfolio.values[i] == doctest::Approx(c.values[i]));
    CHECK(rep.squared_deviation == doctest::Approx(std::pow(c.terminal() - c.initial(), 2)));
    CHECK(rep.residual_increments.size() == grid.steps());
  }

  TEST_CASE("self-financing bookkeeping") {
    const Fig f;
    const TimeGrid grid(1.0, 200);
    const auto noise = levy::sample_noise(f.m, grid, 2, 1);
    const auto c = market::geometric_price_path(f.c, f.m, noise, grid);
    const std::vector<levy::PathSeries> assets{market::geometric_price_path(f.s1, f.m, noise, grid),
                                               market::geometric_price_path(f.s2, f.m, noise, grid)};
    const auto rep = evolve_portfolio(c, assets, constant_ratio_rule({0.45, 0.57}), grid);
    CHECK(rep.portfolio.initial() == c.initial());
    CHECK(rep.strategy.theta[0] ==
          doctest::Approx(rep.strategy.holding(0, 0) * 100.0 + rep.strategy.holding(0, 1) * 100.0));
    CHECK(self_financing_error(rep, c, assets) < 1e-9);
    for (std::size_t i = 0; i < grid.steps(); ++i) {
      const double dv = (c.values[i + 1] - c.values[i]) -
                        rep.strategy.holding(i, 0) * (assets[0].values[i + 1] - assets[0].values[i]) -
                        rep.strategy.holding(i, 1) * (assets[1].values[i + 1] - assets[1].values[i]);
      REQUIRE(rep.residual_increments[i] == doctest::Approx(dv).epsilon(1e-12));
    }
  }

  TEST_CASE("holdings use left-limit prices") {
    const LevyMeasure none;
    const TimeGrid grid(1.0, 5);
    const auto noise = levy::sample_noise(none, grid, 3, 0);
    const auto c = market::euler_price_path({100.0, 0.15, {}}, none, noise, grid);
    const std::vector<levy::PathSeries> s{market::euler_price_path({50.0, 0.20, {}}, none, noise, grid)};
    const auto rep = evolve_portfolio(c, s, constant_ratio_rule({0.75}), grid);
    for (std::size_t i = 0; i < grid.steps(); ++i) {
      CHECK(rep.strategy.holding(i, 0) == doctest::Approx(0.75 * c.left_limits[i] / s[0].left_limits[i]));
      CHECK(std::abs(rep.residual_increments[i]) < 1e-10);
    }
  }

  TEST_CASE("fixed holdings and grid mismatches") {
    const LevyMeasure none;
    const TimeGrid grid(1.0, 3);
    const auto noise = levy::sample_noise(none, grid, 3, 0);
    const auto c = market::euler_price_path({100.0, 0.15, {}}, none, noise, grid);
    const std::vector<levy::PathSeries> s{market::euler_price_path({50.0, 0.20, {}}, none, noise, grid)};
    const auto rep = evolve_portfolio(c, s, fixed_holdings_rule({1.0, 2.0, 3.0, 4.0}, 1), grid);
    CHECK(rep.strategy.holding(1, 0) == 2.0);
    CHECK_THROWS_AS(evolve_portfolio(c, s, fixed_holdings_rule({1.0}, 1), grid), ArgumentError);
    CHECK_THROWS_AS(evolve_portfolio(c, s, constant_ratio_rule({0.1}), TimeGrid(1.0, 4)), ArgumentError);
  }

  TEST_CASE("monte carlo error matches the analytic error for the asset-1 hedge") {
    const Fig f;
    const TimeGrid grid(1.0, 1000);
    const double ratio = single_asset_hedge(1.0, 1.0, single_coefficients(f.c, f.s1, f.m));
    const auto rule = constant_ratio_rule({ratio});
    std::vector<double> sq(10000);
    for (std::size_t p = 0; p < sq.size(); ++p) {
      const auto noise = levy::sample_noise(f.m, grid, 1, p);
      const auto c = market::euler_price_path(f.c, f.m, noise, grid);
      const std::vector<levy::PathSeries> s{market::euler_price_path(f.s1, f.m, noise, grid)};
      sq[p] = evolve_portfolio(c, s, rule, grid).squared_deviation;
    }
    const std::array<AssetSpec, 1> one{f.s1};
    const double analytic = analytic_delta(f.c, one, std::array{ratio}, f.m, 1.0);
    CHECK(sim::sample_stats(sq).z_score(analytic) < 3.0);
  }
}
