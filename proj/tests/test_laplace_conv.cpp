#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "logratio/cutplane.hpp"
#include "logratio/laplace_conv.hpp"

using namespace logratio;

// mpmath, 30 digits, against the boundary-value density formulas
static constexpr double kG05At1 = 0.53005472162617635475;
static constexpr double kG05At1em5 = 0.93737006544671158976;
static constexpr double kH05At1 = 0.21712364835934447779;
static constexpr double kH05At1em3 = 19.345148944982551446;
static constexpr double kH05At1em5 = 635.51445091371468129;

TEST_CASE("laplace transform of the sub-unit density") {
    const RatioParam r(0.5);
    CHECK(g_fn(r, 1.0) == doctest::Approx(kG05At1).epsilon(1e-10));
    CHECK(std::abs(g_fn(r, 50.0) - 0.5) < 1e-10);

    // g maps (0, inf) into (r, 1) and decreases; by s = 100 the transform
    // sits at r to the last ulp, so the strict lower bound stops there
    double prev = 1.0;
    for (double s : {1e-4, 1e-2, 1.0, 10.0}) {
        const double v = g_fn(r, s);
        CHECK(v > 0.5);
        CHECK(v < 1.0);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("g approaches 1 only logarithmically") {
    // 1 - g(s) ~ log(1/r)/log(1/s): still 0.063 at s = 1e-5
    const RatioParam r(0.5);
    CHECK(g_fn(r, 1e-5) == doctest::Approx(kG05At1em5).epsilon(1e-9));
    const double d2 = 1.0 - g_fn(r, 1e-2);
    const double d4 = 1.0 - g_fn(r, 1e-4);
    const double d6 = 1.0 - g_fn(r, 1e-6);
    CHECK(d2 > d4);
    CHECK(d4 > d6);
    CHECK(d6 > 0.0);
}

TEST_CASE("g rejects super-unit parameters and bad s") {
    CHECK_THROWS_AS(g_fn(RatioParam(2.5), 1.0), std::domain_error);
    CHECK_THROWS_AS(g_fn(RatioParam(1.0), 1.0), std::domain_error);
    CHECK_THROWS_AS(g_fn(RatioParam(0.5), 0.0), std::domain_error);
    CHECK_THROWS_AS(g_fn(RatioParam(0.5), -1.0), std::domain_error);
}

TEST_CASE("companion transform h") {
    const RatioParam r(0.5);
    CHECK(h_fn(r, 1.0) == doctest::Approx(kH05At1).epsilon(1e-10));
    CHECK(h_fn(r, 50.0) < 1e-10);
    CHECK(h_fn(r, 50.0) > 0.0);

    // blows up like 1/(s log^2 s) toward s = 0
    CHECK(h_fn(r, 1e-3) == doctest::Approx(kH05At1em3).epsilon(1e-9));
    CHECK(h_fn(r, 1e-5) == doctest::Approx(kH05At1em5).epsilon(1e-9));
    CHECK(h_fn(r, 1e-5) > h_fn(r, 1e-3));
    CHECK(h_fn(r, 1e-3) > h_fn(r, 1e-1));

    CHECK_THROWS_AS(h_fn(RatioParam(2.5), 1.0), std::domain_error);
    CHECK_THROWS_AS(h_fn(RatioParam(0.5), 0.0), std::domain_error);
}

TEST_CASE("g is completely monotone at sampled orders") {
    const RatioParam r(0.5);
    std::vector<double> s, v;
    for (int k = 0; k < 8; ++k) {
        s.push_back(0.25 * std::pow(2.0, k));
        v.push_back(g_fn(r, s.back()));
    }
    // divided differences of order n carry sign (-1)^n
    for (int order = 1; order <= 4; ++order) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            v[i] = (v[i + 1] - v[i]) / (s[i + order] - s[i]);
        v.pop_back();
        for (double d : v)
            CHECK((order % 2 == 1 ? d < 0.0 : d > 0.0));
    }
}

TEST_CASE("convolution identity") {
    for (double x : {0.1, 1.0}) {
        const ConvResidual c = convolution_residual(RatioParam(0.5), x);
        CHECK(c.x == x);
        CHECK(std::abs(c.residual) < 1e-6);
        CHECK(std::abs(c.residual) <= 10.0 * c.err_est);
    }
    const ConvResidual c5 = convolution_residual(RatioParam(0.5), 5.0);
    CHECK(std::abs(c5.residual) < 1e-5);
    CHECK(std::abs(c5.residual) <= 10.0 * c5.err_est);
}

TEST_CASE("convolution identity across parameters") {
    for (double r : {0.3, 0.8}) {
        for (double x : {0.5, 2.0}) {
            const ConvResidual c = convolution_residual(RatioParam(r), x);
            CHECK(std::abs(c.residual) < 1e-5);
        }
    }
}

TEST_CASE("convolution rejects bad inputs") {
    CHECK_THROWS_AS(convolution_residual(RatioParam(2.5), 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(convolution_residual(RatioParam(0.5), 0.0),
                    std::domain_error);
}

TEST_CASE("reciprocity identity") {
    // f_{1/2}(2) f_2(1) = (log 2/log 3)(log 3/log 2)
    CHECK(reciprocity_residual(RatioParam(0.5), 2.0) < 1e-14);
    CHECK(reciprocity_residual(RatioParam(1.0), 7.0) == 0.0);
    CHECK(reciprocity_residual(RatioParam(3.0), 0.4) < 1e-14);

    std::mt19937 rng(20260817u);
    std::uniform_real_distribution<double> ur(std::log(0.05), std::log(20.0));
    std::uniform_real_distribution<double> ux(std::log(0.01), std::log(100.0));
    for (int i = 0; i < 100; ++i) {
        const double r = std::exp(ur(rng));
        const double x = std::exp(ux(rng));
        CAPTURE(r);
        CAPTURE(x);
        CHECK(reciprocity_residual(RatioParam(r), x) < 1e-13);
    }
}

TEST_CASE("double-laplace consistency: L g reproduces f(y)/y") {
    const RatioParam r(0.5);
    QuadConfig inner;  // lighter inner tolerance; the target is 1e-5
    inner.abs_tol = inner.rel_tol = 1e-9;
    QuadConfig outer;
    outer.abs_tol = outer.rel_tol = 1e-7;

    for (double y : {1.0, 2.0}) {
        const QuadResult lg = integrate_finite(
            [&](double x) { return std::exp(-y * x) * g_fn(r, x, inner); },
            0.0, 60.0 / y, {}, outer);
        const double want = f_direct(r, {y, 0.0}).real() / y;
        CHECK(lg.value == doctest::Approx(want).epsilon(1e-5));
    }
}
