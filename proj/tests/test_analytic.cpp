#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "miacomp/analytic.hpp"
#include "miacomp/params.hpp"
#include "miacomp/specfun.hpp"
#include "oracles.hpp"

namespace an = miacomp::analytic;
namespace sf = miacomp::specfun;
using miacomp::NetworkParams;
using miacomp::Scenario;

namespace {
const NetworkParams kP{1.0, 3.0, 75.0};
constexpr double kLn2 = 0.6931471805599453;
const Scenario kAll[4] = {miacomp::kGuNc, miacomp::kGuMia, miacomp::kWuNc, miacomp::kWuMia};
}  // namespace

TEST_SUITE("analytic") {

TEST_CASE("sir ccdf and derivative at delta one half") {
    const double f1 = 1.0 + M_PI / 4.0;
    CHECK(an::g_ccdf(0.5, 1.0) == doctest::Approx(1.0 / f1).epsilon(1e-12));
    const double want = -(M_PI / 8.0 + 0.25) / (f1 * f1);
    CHECK(an::g_ccdf_deriv(0.5, 1.0) == doctest::Approx(want).epsilon(1e-12));
    const double fd = oracle::central_diff([](double x) { return an::g_ccdf(0.5, x); }, 1.0, 1e-5);
    CHECK(an::g_ccdf_deriv(0.5, 1.0) == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("no cooperation ccdfs reduce to the hypergeometric forms") {
    const double delta = kP.delta();
    for (double t : {30.0, 75.0, 400.0, 2000.0}) {
        const double theta = std::expm1(kP.kbits * kLn2 / t);
        const double f = sf::hyp_f(delta, theta);
        const double h = sf::hyp_h(delta, theta);
        CHECK(an::gu_nc_ccdf(kP, t) == doctest::Approx(h / f).epsilon(1e-12));
        const double q = 1.0 / ((1.0 + theta) * f);
        CHECK(an::wu_nc_ccdf(kP, t) == doctest::Approx(1.0 - q * q).epsilon(1e-12));
    }
}

TEST_CASE("early deadlines are certain failures") {
    for (Scenario s : kAll) {
        CHECK(an::ccdf(kP, s, 0.0) == 1.0);
        CHECK(an::ccdf(kP, s, 1e-6) == 1.0);
        CHECK(an::ccdf(kP, s, 0.05) == 1.0);
    }
}

TEST_CASE("gu mia bound equals the convolution oracle") {
    const double delta = kP.delta();
    for (double t : {75.0, 300.0}) {
        const double gamma = 2.0 * std::expm1(kP.kbits * kLn2 / (2.0 * t));
        const double ref = oracle::conv_cdf_ref([&](double y) { return an::g_ccdf(delta, y); },
                                                [&](double y) { return an::g_ccdf(delta, y); },
                                                gamma, 10000);
        CHECK(an::gu_mia_ccdf_bound(kP, t) == doctest::Approx(ref).epsilon(1e-8));
    }
}

TEST_CASE("wu mia bound equals a nested quadrature oracle") {
    const double delta = kP.delta();
    const double t = 75.0;
    const double gamma = 2.0 * std::expm1(kP.kbits * kLn2 / (2.0 * t));
    // outer expectation over v = pi*lambda*D^2 ~ Gamma(2,1), inner Stieltjes
    // convolution of the two conditional codeword laws
    const auto conditional = [&](double v) {
        const auto ccdf1 = [&](double y) {
            return std::exp(-0.5 * v * sf::hyp_h(delta, y)) / (1.0 + y);
        };
        const auto ccdf2 = [&](double y) { return std::exp(-0.5 * v * sf::hyp_h(delta, y)); };
        return oracle::conv_cdf_ref(ccdf2, ccdf1, gamma, 400);
    };
    const double ref = oracle::composite_gl16(
        [&](double v) { return v * std::exp(-v) * conditional(v); }, 0.0, 40.0, 80);
    CHECK(an::wu_mia_ccdf_bound(kP, t) == doctest::Approx(ref).epsilon(2e-4));
}

TEST_CASE("outage asymptote formulas") {
    const double kn = kP.kbits * kLn2 / 1e4;
    const double ratio = kP.delta() / (1.0 - kP.delta());
    CHECK(an::outage_asymptote(kP, miacomp::kGuNc, 1e4) ==
          doctest::Approx(2.0 * 75.0 * kLn2 / 1e4).epsilon(1e-12));
    CHECK(an::outage_asymptote(kP, miacomp::kGuMia, 1e4) ==
          doctest::Approx(0.5 * ratio * ratio * kn * kn).epsilon(1e-12));
    CHECK(an::outage_asymptote(kP, miacomp::kWuNc, 1e4) ==
          doctest::Approx(2.0 * kn / (1.0 - kP.delta())).epsilon(1e-12));
    CHECK(an::outage_asymptote(kP, miacomp::kWuMia, 1e4) ==
          doctest::Approx(0.75 * ratio * ratio * kn * kn).epsilon(1e-12));
    // density drops out of all four
    for (Scenario s : kAll) {
        const double a = an::outage_asymptote(NetworkParams{0.5, 3.0, 75.0}, s, 1e4);
        const double b = an::outage_asymptote(NetworkParams{2.0, 3.0, 75.0}, s, 1e4);
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
}

TEST_CASE("outage approaches its asymptote") {
    CHECK(an::ccdf(kP, miacomp::kGuNc, 1e5) / an::outage_asymptote(kP, miacomp::kGuNc, 1e5) ==
          doctest::Approx(1.0).epsilon(0.02));
    CHECK(an::ccdf(kP, miacomp::kWuNc, 1e5) / an::outage_asymptote(kP, miacomp::kWuNc, 1e5) ==
          doctest::Approx(1.0).epsilon(0.02));
    CHECK(an::ccdf(kP, miacomp::kGuMia, 1e4) / an::outage_asymptote(kP, miacomp::kGuMia, 1e4) ==
          doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("diversity fit recovers an exact power law") {
    const std::vector<double> grid = an::log_grid(1e3, 1e5, 10);
    std::vector<double> ps(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) ps[i] = 1.0 - 50.0 / (grid[i] * grid[i]);
    CHECK(an::diversity_estimate(grid, ps) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("diversity fit rejects out of regime inputs") {
    const std::vector<double> grid = an::log_grid(10.0, 100.0, 5);
    std::vector<double> deep(grid.size(), 0.5);  // outage 0.5, too shallow
    CHECK_THROWS_AS(an::diversity_estimate(grid, deep), std::domain_error);
    std::vector<double> perfect(grid.size(), 1.0);  // zero outage
    CHECK_THROWS_AS(an::diversity_estimate(grid, perfect), std::domain_error);
    CHECK_THROWS_AS(an::diversity_estimate(grid, std::vector<double>(3, 0.999)),
                    std::domain_error);
    CHECK_THROWS_AS(an::diversity_estimate({100.0}, {0.999}), std::domain_error);
}

TEST_CASE("diversity window endpoints invert the asymptote") {
    for (Scenario s : kAll) {
        const auto window = an::diversity_window(kP, s);
        CHECK(window.first < window.second);
        CHECK(an::outage_asymptote(kP, s, window.first) == doctest::Approx(1e-2).epsilon(1e-9));
        CHECK(an::outage_asymptote(kP, s, window.second) == doctest::Approx(1e-6).epsilon(1e-9));
    }
}

TEST_CASE("diversity orders of the analytic curves") {
    const auto slope = [&](Scenario s) {
        const auto window = an::diversity_window(kP, s);
        const std::vector<double> grid = an::log_grid(window.first, window.second, 12);
        const an::CurveFn fn = an::ccdf_fn(kP, s);
        std::vector<double> ps(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) ps[i] = 1.0 - fn(grid[i]);
        return an::diversity_estimate(grid, ps);
    };
    CHECK(slope(miacomp::kGuNc) == doctest::Approx(1.0).epsilon(0.05));
    CHECK(slope(miacomp::kWuNc) == doctest::Approx(1.0).epsilon(0.05));
    CHECK(slope(miacomp::kGuMia) == doctest::Approx(2.0).epsilon(0.075));
    CHECK(slope(miacomp::kWuMia) == doctest::Approx(2.0).epsilon(0.075));
}

TEST_CASE("density invariance of the interference limited curves") {
    for (Scenario s : kAll) {
        for (double t : {20.0, 75.0, 300.0, 1200.0, 8000.0}) {
            const double base = an::ccdf(NetworkParams{1.0, 3.0, 75.0}, s, t);
            CHECK(std::abs(an::ccdf(NetworkParams{0.25, 3.0, 75.0}, s, t) - base) <= 1e-9);
            CHECK(std::abs(an::ccdf(NetworkParams{4.0, 3.0, 75.0}, s, t) - base) <= 1e-9);
        }
    }
}

TEST_CASE("cooperation and user class orderings") {
    for (double t : an::log_grid(5.0, 2e4, 40)) {
        CHECK(an::ccdf(kP, miacomp::kGuMia, t) <= an::ccdf(kP, miacomp::kGuNc, t) + 1e-12);
        CHECK(an::ccdf(kP, miacomp::kWuMia, t) <= an::ccdf(kP, miacomp::kWuNc, t) + 1e-12);
        CHECK(an::wu_nc_ccdf(kP, t) >= an::gu_nc_ccdf(kP, t) - 1e-12);
    }
}

TEST_CASE("success probability is the complement of the ccdf") {
    const an::CurveFn fn = an::ccdf_fn(kP, miacomp::kGuNc);
    CHECK(an::success_prob(fn, 400.0) == doctest::Approx(1.0 - fn(400.0)).epsilon(1e-14));
    CHECK(an::success_prob([](double) { return 1.0; }, 100.0) == 0.0);
    CHECK(an::success_prob([](double) { return 0.0; }, 100.0) == 1.0);
}

TEST_CASE("expected time matches closed forms and the oracle") {
    const double tau = 120.0;
    const an::CurveFn expo = [tau](double t) { return std::exp(-t / tau); };
    for (double n : {50.0, 200.0, 1000.0}) {
        CHECK(an::expected_time(expo, n) ==
              doctest::Approx(tau * -std::expm1(-n / tau)).epsilon(1e-9));
    }
    const an::CurveFn fn = an::ccdf_fn(kP, miacomp::kGuNc);
    CHECK(an::expected_time(fn, 400.0) ==
          doctest::Approx(oracle::expected_time_ref(fn, 400.0)).epsilon(1e-6));
    CHECK(an::expected_time(fn, 200.0) < an::expected_time(fn, 400.0));
}

TEST_CASE("rate of a memoryless decode time is flat") {
    const an::CurveFn expo = [](double t) { return std::exp(-t); };
    for (double n : {5.0, 50.0, 500.0})
        CHECK(an::rate(expo, kP, n) == doctest::Approx(kP.kbits).epsilon(1e-9));
}

TEST_CASE("rate sweep agrees with the direct definition") {
    const an::CurveFn fn = an::ccdf_fn(kP, miacomp::kGuNc);
    const std::vector<double> grid = an::log_grid(kP.kbits / 20.0, 20.0 * kP.kbits, 40);
    const auto curve = an::rate_curve(fn, kP, grid);
    REQUIRE(curve.size() == grid.size());
    for (std::size_t i : {std::size_t{0}, std::size_t{9}, std::size_t{21}, std::size_t{39}}) {
        CHECK(curve[i].n_uses == grid[i]);
        CHECK(curve[i].value == doctest::Approx(an::rate(fn, kP, grid[i])).epsilon(1e-7));
    }
}

TEST_CASE("rate maximum is invariant to packet size with a scaled grid") {
    const NetworkParams p2{1.0, 3.0, 150.0};
    const an::RateMax m1 = an::max_rate(an::ccdf_fn(kP, miacomp::kGuNc), kP,
                                        an::log_grid(kP.kbits / 20.0, 20.0 * kP.kbits, 120));
    const an::RateMax m2 = an::max_rate(an::ccdf_fn(p2, miacomp::kGuNc), p2,
                                        an::log_grid(p2.kbits / 20.0, 20.0 * p2.kbits, 120));
    CHECK(m1.r_max == doctest::Approx(m2.r_max).epsilon(1e-6));
}

TEST_CASE("rate maximum refinement and edge detection") {
    const an::CurveFn fn = an::ccdf_fn(kP, miacomp::kGuNc);
    const std::vector<double> grid = an::log_grid(kP.kbits / 20.0, 20.0 * kP.kbits, 80);
    const an::RateMax m = an::max_rate(fn, kP, grid);
    CHECK_FALSE(m.edge);
    CHECK(m.n_opt > grid.front());
    CHECK(m.n_opt < grid.back());
    for (double n : grid) CHECK(m.r_max >= an::rate(fn, kP, n) - 1e-12);
    CHECK(m.r_max >= an::rate(fn, kP, 1.01 * m.n_opt) - 1e-10);
    CHECK(m.r_max >= an::rate(fn, kP, 0.99 * m.n_opt) - 1e-10);

    const an::RateMax clipped = an::max_rate(fn, kP, an::log_grid(800.0, 1500.0, 10));
    CHECK(clipped.edge);
    CHECK(clipped.n_opt == doctest::Approx(800.0).epsilon(1e-12));
}

TEST_CASE("rate gains against no cooperation") {
    const std::vector<double> grid = an::log_grid(kP.kbits / 20.0, 20.0 * kP.kbits, 200);
    const an::RateGainResult general = an::rate_gain(kP, miacomp::UserClass::general, grid);
    const an::RateGainResult worst = an::rate_gain(kP, miacomp::UserClass::worst_case, grid);
    CHECK(general.gain > 1.0);
    CHECK(worst.gain > general.gain);
    CHECK(general.gain == doctest::Approx(2.96).epsilon(0.05));
    CHECK(worst.gain > 5.5);
    CHECK(worst.gain < 6.8);
    CHECK(general.mia.n_opt < general.nc.n_opt);
    CHECK(worst.mia.n_opt < worst.nc.n_opt);
    CHECK_FALSE(general.mia.edge);
    CHECK_FALSE(worst.nc.edge);
}

TEST_CASE("grid constructors") {
    const std::vector<double> lg = an::log_grid(2.0, 2000.0, 7);
    REQUIRE(lg.size() == 7);
    CHECK(lg.front() == 2.0);
    CHECK(lg.back() == 2000.0);
    for (std::size_t i = 1; i < lg.size(); ++i) {
        CHECK(lg[i] > lg[i - 1]);
        CHECK(lg[i] / lg[i - 1] == doctest::Approx(lg[1] / lg[0]).epsilon(1e-9));
    }
    const std::vector<double> ln = an::lin_grid(1.0, 5.0, 5);
    REQUIRE(ln.size() == 5);
    CHECK(ln[2] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(an::log_grid(10.0, 10.0, 1) == std::vector<double>{10.0});
    CHECK_THROWS_AS(an::log_grid(-1.0, 10.0, 5), std::domain_error);
    CHECK_THROWS_AS(an::log_grid(10.0, 1.0, 5), std::domain_error);
}

TEST_CASE("parameter validation") {
    CHECK(kP.delta() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS((NetworkParams{1.0, 2.0, 75.0}.validate()), std::domain_error);
    CHECK_THROWS_AS((NetworkParams{-1.0, 3.0, 75.0}.validate()), std::domain_error);
    CHECK_THROWS_AS((NetworkParams{1.0, 3.0, 0.0}.validate()), std::domain_error);
    CHECK(miacomp::kGuNc.codewords() == 1);
    CHECK(miacomp::kWuMia.codewords() == 2);
    CHECK(miacomp::scenario_name(miacomp::kGuMia) == "gu-mia");
}

}  // TEST_SUITE
