#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "miacomp/analytic.hpp"
#include "miacomp/rng.hpp"
#include "miacomp/specfun.hpp"
#include "oracles.hpp"

using miacomp::specfun::hyp_f;
using miacomp::specfun::hyp_f_deriv;
using miacomp::specfun::hyp_h;

TEST_SUITE("specfun") {

TEST_CASE("delta one half closed forms") {
    for (double nu : miacomp::analytic::log_grid(1e-4, 1e6, 80)) {
        const double rt = std::sqrt(nu);
        const double f_ref = 1.0 + rt * std::atan(rt);
        const double fp_ref = 0.5 * std::atan(rt) / rt + 0.5 / (1.0 + nu);
        CHECK(hyp_f(0.5, nu) == doctest::Approx(f_ref).epsilon(1e-10));
        CHECK(hyp_h(0.5, nu) == doctest::Approx(f_ref - 1.0).epsilon(1e-10));
        CHECK(hyp_f_deriv(0.5, nu) == doctest::Approx(fp_ref).epsilon(1e-10));
    }
}

TEST_CASE("integral representation across both branches") {
    for (double delta : {0.11, 0.35, 2.0 / 3.0, 0.85, 0.97}) {
        for (double nu : miacomp::analytic::log_grid(1e-3, 1e5, 25)) {
            const double ref = oracle::hyp_f_ref(delta, nu);
            CHECK(hyp_f(delta, nu) == doctest::Approx(ref).epsilon(1e-7));
        }
    }
}

TEST_CASE("identity 1 + H equals F on random inputs") {
    miacomp::mc::StreamRng rng(20240917);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double delta = 0.02 + 0.96 * rng.uniform01();
        const double nu = std::pow(10.0, -3.0 + 9.0 * rng.uniform01());
        const double f = hyp_f(delta, nu);
        worst = std::max(worst, std::abs((1.0 + hyp_h(delta, nu) - f) / f));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("derivative matches finite differences") {
    for (double delta : {0.15, 0.5, 2.0 / 3.0, 0.9}) {
        for (double nu : miacomp::analytic::log_grid(1e-2, 1e4, 12)) {
            const double fd = oracle::central_diff(
                [delta](double x) { return hyp_f(delta, x); }, nu, 1e-4 * (1.0 + nu));
            CHECK(hyp_f_deriv(delta, nu) == doctest::Approx(fd).epsilon(1e-5));
        }
    }
}

TEST_CASE("shape and endpoints") {
    const double delta = 2.0 / 3.0;
    CHECK(hyp_f(delta, 0.0) == 1.0);
    CHECK(hyp_h(delta, 0.0) == 0.0);
    CHECK(hyp_f_deriv(delta, 0.0) == doctest::Approx(delta / (1.0 - delta)).epsilon(1e-12));
    double prev_f = 1.0, prev_h = 0.0;
    for (double nu : miacomp::analytic::log_grid(1e-3, 1e5, 40)) {
        const double f = hyp_f(delta, nu), h = hyp_h(delta, nu);
        CHECK(f > prev_f);
        CHECK(h > prev_h);
        CHECK(hyp_f_deriv(delta, nu) > 0.0);
        prev_f = f;
        prev_h = h;
    }
}

TEST_CASE("small argument expansion") {
    const double delta = 2.0 / 3.0;
    const double y = 1e-8;
    CHECK(hyp_h(delta, y) / (y * delta / (1.0 - delta)) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("series and tail branch agree across the crossover") {
    for (double delta : {0.15, 0.5, 2.0 / 3.0, 0.9}) {
        const double lo = 998.9, hi = 1001.0, mid = 0.5 * (lo + hi);
        const double pred = hyp_f_deriv(delta, mid) * (hi - lo);
        CHECK(hyp_f(delta, hi) - hyp_f(delta, lo) ==
              doctest::Approx(pred).epsilon(1e-7).scale(hyp_f(delta, mid)));
        CHECK(hyp_h(delta, hi) - hyp_h(delta, lo) ==
              doctest::Approx(pred).epsilon(1e-7).scale(hyp_f(delta, mid)));
    }
}

TEST_CASE("power law growth at large argument") {
    for (double delta : {0.25, 2.0 / 3.0, 0.9}) {
        const double ratio = hyp_f(delta, 1e6) / hyp_f(delta, 1e5);
        CHECK(ratio == doctest::Approx(std::pow(10.0, delta)).epsilon(0.02));
    }
}

TEST_CASE("domain rejection") {
    CHECK_THROWS_AS(hyp_f(0.005, 1.0), std::domain_error);
    CHECK_THROWS_AS(hyp_f(0.995, 1.0), std::domain_error);
    CHECK_THROWS_AS(hyp_f(0.5, -0.1), std::domain_error);
    CHECK_THROWS_AS(hyp_h(0.5, std::nan("")), std::domain_error);
    CHECK_THROWS_AS(hyp_f_deriv(1.2, 1.0), std::domain_error);
}

}  // TEST_SUITE
