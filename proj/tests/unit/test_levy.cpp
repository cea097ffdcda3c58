#include <doctest.h>

#include <cmath>
#include <vector>

#include "levyhedge/errors.hpp"
#include "levyhedge/levy/calculus.hpp"
#include "levyhedge/levy/integrate.hpp"
#include "levyhedge/levy/noise.hpp"
#include "levyhedge/levy/rng.hpp"
#include "levyhedge/levy/types.hpp"
#include "levyhedge/sim/stats.hpp"

using namespace levyhedge;
using namespace levyhedge::levy;

namespace {

LevyMeasure fig_measure() { return LevyMeasure::bernoulli(15.0, 0.5, 1.0, -1.0); }

}  // namespace

TEST_SUITE("levy.types") {
  TEST_CASE("bernoulli measure places m*p at g and m*(1-p) at h") {
    const auto m = fig_measure();
    REQUIRE(m.size() == 2);
    CHECK(m.location(0) == 1.0);
    CHECK(m.location(1) == -1.0);
    CHECK(m.intensity(0) == 7.5);
    CHECK(m.intensity(1) == 7.5);
    CHECK(m.total_intensity() == 15.0);
    CHECK(LevyMeasure::bernoulli(10.0, 1.0, 1.0, -1.0).size() == 1);
    CHECK(LevyMeasure::bernoulli(0.0, 0.5, 1.0, -1.0).empty());
  }

  TEST_CASE("measure invariants are enforced") {
    CHECK_THROWS_AS(LevyMeasure({{1.0, 0.0}}), InvariantError);
    CHECK_THROWS_AS(LevyMeasure({{1.0, -2.0}}), InvariantError);
    CHECK_THROWS_AS(LevyMeasure({{1.0, 1.0}, {1.0, 2.0}}), InvariantError);
    CHECK_THROWS_AS(LevyMeasure::bernoulli(15.0, 1.5, 1.0, -1.0), ArgumentError);
    CHECK(LevyMeasure().empty());
  }

  TEST_CASE("compensate sums jump_vol against intensities") {
    const auto m = fig_measure();
    const std::vector<double> zero{0.0, 0.0};
    CHECK(compensate(m, zero) == 0.0);
    const std::vector<double> g{std::expm1(0.3), std::expm1(-0.3)};
    CHECK(compensate(m, g) == doctest::Approx(0.680077711932907).epsilon(1e-13));
    const std::vector<double> three{3.0};
    CHECK(compensate(LevyMeasure({{1.0, 2.0}}), three) == 6.0);
    const std::vector<double> short_vol{1.0};
    CHECK_THROWS_AS(compensate(m, short_vol), ArgumentError);
  }

  TEST_CASE("compensate is linear") {
    const auto m = fig_measure();
    const std::vector<double> a{0.3, -0.7}, b{1.1, 0.2};
    const std::vector<double> mix{2.0 * a[0] - 3.0 * b[0], 2.0 * a[1] - 3.0 * b[1]};
    CHECK(std::abs(compensate(m, mix) - (2.0 * compensate(m, a) - 3.0 * compensate(m, b))) < 1e-12);
  }

  TEST_CASE("time grid ends exactly at the horizon") {
    const TimeGrid g(0.7, 3);
    CHECK(g.time(0) == 0.0);
    CHECK(g.time(3) == 0.7);
    CHECK(g.time(1) < g.time(2));
    CHECK_THROWS_AS(TimeGrid(0.0, 10), ArgumentError);
    CHECK_THROWS_AS(TimeGrid(1.0, 0), ArgumentError);
  }
}

TEST_SUITE("levy.noise") {
  TEST_CASE("substreams differ by path and by stream") {
    CHECK(substream_seed(1, 0, 1) != substream_seed(1, 1, 1));
    CHECK(substream_seed(1, 0, 1) != substream_seed(1, 0, 2));
    CHECK(substream_seed(1, 0, 1) != substream_seed(2, 0, 1));
  }

  TEST_CASE("uniform stays in the open unit interval and normals are standard") {
    RandomStream rng(42);
    std::vector<double> xs(200000);
    for (auto& x : xs) {
      const double u = rng.uniform();
      REQUIRE(u > 0.0);
      REQUIRE(u < 1.0);
      x = rng.normal();
    }
    const auto st = sim::sample_stats(xs);
    CHECK(std::abs(st.mean) < 4.0 * st.std_error);
    CHECK(st.variance == doctest::Approx(1.0).epsilon(0.02));
  }

  TEST_CASE("poisson draws have the requested mean") {
    RandomStream rng(9);
    for (double mean : {0.0075, 0.5, 3.0, 45.0}) {
      std::vector<double> xs(100000);
      for (auto& x : xs) x = rng.poisson(mean);
      const auto st = sim::sample_stats(xs);
      CHECK(st.z_score(mean) < 4.0);
      CHECK(st.variance == doctest::Approx(mean).epsilon(0.05));
    }
    CHECK(rng.poisson(0.0) == 0);
  }

  TEST_CASE("sample_noise is a deterministic function of seed and path") {
    const auto m = fig_measure();
    const TimeGrid grid(1.0, 1000);
    const auto a = sample_noise(m, grid, 5, 3);
    const auto b = sample_noise(m, grid, 5, 3);
    CHECK(a == b);
    CHECK_FALSE(a == sample_noise(m, grid, 5, 4));
    CHECK_FALSE(a == sample_noise(m, grid, 6, 3));
    CHECK(a.steps() == 1000);
    CHECK(a.atom_count() == 2);
  }

  TEST_CASE("brownian draws do not depend on the jump measure") {
    const TimeGrid grid(1.0, 500);
    const auto with_jumps = sample_noise(fig_measure(), grid, 11, 2);
    const auto without = sample_noise(LevyMeasure(), grid, 11, 2);
    const auto a = with_jumps.brownian_increments();
    const auto b = without.brownian_increments();
    CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
    for (std::size_t i = 0; i < grid.steps(); ++i) CHECK(without.jumps(i).empty());
  }

  TEST_CASE("mean jump count over the horizon matches the total intensity") {
    const auto m = fig_measure();
    const TimeGrid grid(1.0, 1000);
    std::vector<double> totals(10000), w(10000);
    for (std::size_t p = 0; p < totals.size(); ++p) {
      const auto n = sample_noise(m, grid, 1, p);
      totals[p] = static_cast<double>(n.jump_count_path().back());
      w[p] = n.brownian_path().back();
    }
    const auto jumps = sim::sample_stats(totals);
    CHECK(jumps.z_score(15.0) < 3.0);
    CHECK(jumps.variance == doctest::Approx(15.0).epsilon(0.05));
    const auto bm = sim::sample_stats(w);
    CHECK(bm.z_score(0.0) < 3.0);
    CHECK(bm.variance == doctest::Approx(1.0).epsilon(0.05));
  }

  TEST_CASE("counts round-trip through the sparse layout") {
    const std::vector<std::vector<std::uint32_t>> counts{{0, 0}, {1, 0}, {0, 2}, {3, 1}};
    const auto n = NoiseRealization::from_counts({0.1, -0.2, 0.0, 0.05}, counts, 2);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 2; ++k) CHECK(n.count(i, k) == counts[i][k]);
    CHECK(n.jumps(0).empty());
    CHECK(n.jumps(3).size() == 2);
    CHECK(n.jump_count_path() == std::vector<std::uint64_t>{0, 0, 1, 3, 7});
    CHECK(n.atom_count_path(1) == std::vector<std::uint64_t>{0, 0, 0, 2, 3});
    const auto x = n.compound_path(fig_measure());
    CHECK(x.back() == doctest::Approx(1.0 - 2.0 + 3.0 - 1.0));
    const auto w = n.brownian_path();
    CHECK(w.size() == 5);
    CHECK(w.back() == doctest::Approx(-0.05));
  }

  TEST_CASE("malformed sparse noise is rejected") {
    CHECK_THROWS_AS(NoiseRealization({0.0, 0.0}, {0, 1, 1}, {{5, 1}}, 2), ArgumentError);
    CHECK_THROWS_AS(NoiseRealization({0.0, 0.0}, {0, 1, 1}, {{0, 0}}, 2), ArgumentError);
    CHECK_THROWS_AS(NoiseRealization({0.0, 0.0}, {0, 1}, {{0, 1}}, 2), ArgumentError);
    CHECK_THROWS_AS(NoiseRealization({0.0}, {0, 2}, {{1, 1}, {0, 1}}, 2), ArgumentError);
  }
}

TEST_SUITE("levy.integrate") {
  TEST_CASE("null dynamics give a constant path") {
    const auto m = fig_measure();
    const TimeGrid grid(1.0, 100);
    const auto path = integrate(SymmetricCoefficients::null(2), m, sample_noise(m, grid, 1, 0), grid, 5.0);
    for (double v : path.values) CHECK(v == 5.0);
  }

  TEST_CASE("deterministic drift integrates exactly") {
    const TimeGrid grid(1.0, 1000);
    const LevyMeasure none;
    const auto path = integrate(SymmetricCoefficients{1.0, 0.0, {}}, none, sample_noise(none, grid, 1, 0), grid, 2.0);
    CHECK(path.terminal() == doctest::Approx(3.0).epsilon(1e-12));
  }

  TEST_CASE("one euler step matches the hand computation") {
    const auto m = fig_measure();
    const TimeGrid grid(1.0, 4);
    const auto noise = NoiseRealization::from_counts({0.1, -0.2, 0.3, 0.0}, {{0, 0}, {1, 0}, {0, 2}, {0, 0}}, 2);
    const SymmetricCoefficients c{0.5, 2.0, {0.3, -0.1}};
    const auto path = integrate(c, m, noise, grid, 1.0);
    const double dt = 0.25, comp = (0.3 - 0.1) * 7.5 * dt;
    double x = 1.0;
    const double jumps[4] = {0.0, 0.3, -0.2, 0.0};
    const double dw[4] = {0.1, -0.2, 0.3, 0.0};
    for (int i = 0; i < 4; ++i) {
      CHECK(path.left_limits[i] == doctest::Approx(x).epsilon(1e-14));
      x += 0.5 * dt + 2.0 * dw[i] + jumps[i] - comp;
      CHECK(path.values[i + 1] == doctest::Approx(x).epsilon(1e-14));
    }
  }

  TEST_CASE("state-dependent provider sees the left limit") {
    const LevyMeasure none;
    const TimeGrid grid(1.0, 10);
    const auto noise = sample_noise(none, grid, 3, 0);
    std::vector<double> seen;
    auto provider = [&seen](std::size_t, double, double x) {
      seen.push_back(x);
      return SymmetricCoefficients{x, 0.0, {}};
    };
    const auto path = integrate(provider, none, noise, grid, 1.0);
    REQUIRE(seen.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) CHECK(seen[i] == path.left_limits[i]);
    CHECK(path.terminal() == doctest::Approx(std::pow(1.1, 10)));
  }

  TEST_CASE("integration errors name the failing step") {
    const LevyMeasure m({{1.0, 1.0}});
    const TimeGrid grid(1.0, 3);
    const auto noise = NoiseRealization::from_counts({0.0, 0.0, 0.0}, {{0}, {1}, {0}}, 1);
    try {
      integrate_proportional(SymmetricCoefficients{0.0, 0.0, {-1.5}}, m, noise, grid, 1.0);
      FAIL("expected IntegrationError");
    } catch (const IntegrationError& e) {
      CHECK(e.step() == 1);
    }
    auto blowup = [](std::size_t, double, double x) { return SymmetricCoefficients{x * 1e308, 0.0, {0.0}}; };
    CHECK_THROWS_AS(integrate(blowup, m, noise, grid, 10.0), IntegrationError);
  }

  TEST_CASE("shape mismatches are argument errors") {
    const auto m = fig_measure();
    const TimeGrid grid(1.0, 10);
    const auto noise = sample_noise(m, grid, 1, 0);
    CHECK_THROWS_AS(integrate(SymmetricCoefficients::null(2), m, noise, TimeGrid(1.0, 11), 0.0), ArgumentError);
    CHECK_THROWS_AS(integrate(SymmetricCoefficients::null(1), LevyMeasure({{1.0, 1.0}}), noise, grid, 0.0),
                    ArgumentError);
  }

  TEST_CASE("brownian isometry within 5 percent") {
    const LevyMeasure none;
    const TimeGrid grid(1.0, 200);
    std::vector<double> sq(10000);
    for (std::size_t p = 0; p < sq.size(); ++p) {
      const double d = integrate(SymmetricCoefficients{0.0, 1.0, {}}, none, sample_noise(none, grid, 2, p), grid, 0.0)
                           .terminal();
      sq[p] = d * d;
    }
    CHECK(sim::sample_stats(sq).mean == doctest::Approx(1.0).epsilon(0.05));
  }
}

TEST_SUITE("levy.calculus") {
  TEST_CASE("product rule on a single atom") {
    const LevyMeasure m({{1.0, 1.0}});
    const SymmetricCoefficients a{0.07, 0.1, {0.2}};
    const auto p = product_coefficients(a, a, m);
    CHECK(p.drift == doctest::Approx(2 * 0.07 + 0.01 + 0.04).epsilon(1e-14));
    CHECK(p.brownian_vol == doctest::Approx(0.2));
    CHECK(p.jump_vol[0] == doctest::Approx(0.44));
  }

  TEST_CASE("null coefficients are the product identity") {
    const auto m = fig_measure();
    const SymmetricCoefficients b{0.03, 0.2, {0.5, -0.4}};
    CHECK(product_coefficients(SymmetricCoefficients::null(2), b, m) == b);
  }

  TEST_CASE("quotient identities") {
    const auto m = fig_measure();
    const SymmetricCoefficients a{0.03, 0.2, {0.5, -0.4}}, b{-0.01, 0.1, {0.3, -0.2}};
    const auto self = quotient_coefficients(a, a, m);
    CHECK(self.drift == doctest::Approx(0.0));
    CHECK(self.brownian_vol == 0.0);
    for (double g : self.jump_vol) CHECK(g == 0.0);
    const auto back = product_coefficients(quotient_coefficients(a, b, m), b, m);
    CHECK(std::abs(back.drift - a.drift) < 1e-12);
    CHECK(std::abs(back.brownian_vol - a.brownian_vol) < 1e-12);
    for (std::size_t k = 0; k < 2; ++k) CHECK(std::abs(back.jump_vol[k] - a.jump_vol[k]) < 1e-12);
  }

  TEST_CASE("singular denominators and mismatched measures are rejected") {
    const auto m = fig_measure();
    const SymmetricCoefficients a{0.0, 0.1, {0.5, -0.4}}, b{0.0, 0.1, {0.3, -1.0}};
    try {
      quotient_coefficients(a, b, m);
      FAIL("expected SingularDenominatorError");
    } catch (const SingularDenominatorError& e) {
      CHECK(e.atom() == 1);
    }
    CHECK_THROWS_AS(product_coefficients(a, SymmetricCoefficients{0.0, 0.1, {0.3}}, m), ArgumentError);
  }

  TEST_CASE("geometric path has the exponential closed form") {
    const auto m = fig_measure();
    const TimeGrid grid(1.0, 3);
    const auto noise = NoiseRealization::from_counts({0.1, -0.3, 0.2}, {{1, 0}, {0, 0}, {0, 1}}, 2);
    const SymmetricCoefficients c{0.04, 0.2, {0.5, -0.25}};
    const auto path = geometric_path(c, m, noise, grid, 10.0);
    const double w = 0.0, comp = (0.5 - 0.25) * 7.5;
    const double expected =
        10.0 * std::exp((0.04 - 0.02 - comp) * 1.0 + 0.2 * (0.1 - 0.3 + 0.2 + w)) * 1.5 * 0.75;
    CHECK(path.terminal() == doctest::Approx(expected).epsilon(1e-13));
    for (std::size_t i = 0; i < 3; ++i) CHECK(path.left_limits[i] == path.values[i]);
  }

  TEST_CASE("closed-form product equals the pointwise product") {
    const auto m = fig_measure();
    const TimeGrid grid(1.0, 1000);
    const SymmetricCoefficients a{0.02, 0.15, {std::expm1(0.25), std::expm1(-0.25)}};
    const SymmetricCoefficients b{-0.01, 0.2, {std::expm1(0.3), std::expm1(-0.3)}};
    const auto ab = product_coefficients(a, b, m);
    const auto q = quotient_coefficients(a, b, m);
    for (std::uint64_t p = 0; p < 20; ++p) {
      const auto n = sample_noise(m, grid, 4, p);
      const auto pa = geometric_path(a, m, n, grid, 3.0);
      const auto pb = geometric_path(b, m, n, grid, 2.0);
      const auto pab = geometric_path(ab, m, n, grid, 6.0);
      const auto pq = geometric_path(q, m, n, grid, 1.5);
      for (std::size_t i = 0; i <= grid.steps(); ++i) {
        REQUIRE(pab.values[i] == doctest::Approx(pa.values[i] * pb.values[i]).epsilon(1e-10));
        REQUIRE(pq.values[i] == doctest::Approx(pa.values[i] / pb.values[i]).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("euler proportional paths approach the closed form") {
    const auto m = fig_measure();
    const SymmetricCoefficients c{0.0, 0.2, {std::expm1(0.3), std::expm1(-0.3)}};
    const TimeGrid coarse(1.0, 250), fine(1.0, 4000);
    std::vector<double> ec, ef;
    for (std::uint64_t p = 0; p < 50; ++p) {
      const auto nc = sample_noise(m, coarse, 8, p);
      const auto nf = sample_noise(m, fine, 8, p);
      ec.push_back(std::abs(integrate_proportional(c, m, nc, coarse, 1.0).terminal() -
                            geometric_path(c, m, nc, coarse, 1.0).terminal()));
      ef.push_back(std::abs(integrate_proportional(c, m, nf, fine, 1.0).terminal() -
                            geometric_path(c, m, nf, fine, 1.0).terminal()));
    }
    CHECK(sim::median(ef) < 0.5 * sim::median(ec));
  }
}
