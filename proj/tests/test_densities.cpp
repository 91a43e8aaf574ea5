#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "logratio/densities.hpp"

using namespace logratio;

// Reference values computed with a 50-digit arbitrary-precision evaluator.
namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSigma05At15 = 0.089293827433895320152;   // -log(0.25)/(1.5(log^2 0.5+pi^2))
constexpr double kSigma05At3 = 0.044646913716947660076;    // log(4)/(3(log^2 2+pi^2))
constexpr double kTSigma05At21 = 0.31290008535073584704;
constexpr double kTSigma05At100 = 0.022698262434383002051;
constexpr double kOmega25At05 = 1.4426950408889634074;     // -1/log(0.5)
constexpr double kOmega25At2 = 0.14046098554536575282;     // log(4)/pi^2
constexpr double kOmega25At04 = 1.9576151889712176868;     // -1/log(0.6)
constexpr double kPhi05AtM3 = 0.13394074115084298023;      // 3*sigma_{0.5}(3)
constexpr double kDSigma05At3 = -0.033975295181598196797;  // d/dt sigma_{0.5} at t=3
}  // namespace

TEST_CASE("sigma reference values and sentinel") {
    RatioParam r(0.5);
    CHECK(sigma_density(r, 2.0) == kInf);
    CHECK(sigma_density(r, 1.5) == doctest::Approx(kSigma05At15).epsilon(1e-14));
    CHECK(sigma_density(r, 3.0) == doctest::Approx(kSigma05At3).epsilon(1e-14));
    CHECK_THROWS_AS(sigma_density(r, 1.0), std::domain_error);
    CHECK_THROWS_AS(sigma_density(r, 0.5), std::domain_error);
    CHECK_THROWS_AS(sigma_density(RatioParam(2.5), 3.0), std::domain_error);
}

TEST_CASE("omega reference values") {
    RatioParam r(2.5);
    CHECK(omega_density(r, 1.0) == 0.0);
    CHECK(omega_density(r, 0.5) == doctest::Approx(kOmega25At05).epsilon(1e-14));
    CHECK(omega_density(r, 2.0) == doctest::Approx(kOmega25At2).epsilon(1e-14));
    CHECK(omega_density(r, 0.4) == doctest::Approx(kOmega25At04).epsilon(1e-14));
    CHECK_THROWS_AS(omega_density(r, 0.39), std::domain_error);
    CHECK_THROWS_AS(omega_density(RatioParam(0.5), 2.0), std::domain_error);
}

TEST_CASE("phi reference values and support") {
    RatioParam r(0.5);
    CHECK(phi_density(r, 5.0) == 0.0);
    CHECK(phi_density(r, -1.0) == 0.0);
    CHECK(phi_density(r, -0.99) == 0.0);
    CHECK(phi_density(r, -3.0) == doctest::Approx(kPhi05AtM3).epsilon(1e-14));
    CHECK(phi_density(r, -2.0) == kInf);
    CHECK_THROWS_AS(phi_density(RatioParam(2.5), -3.0), std::domain_error);
}

TEST_CASE("nonnegativity across the domains") {
    RatioParam rs(0.5), ro(2.5);
    for (double t : {1.0 + 1e-9, 1.5, 1.9999, 2.0001, 3.0, 50.0, 1e6, 1e12})
        CHECK(sigma_density(rs, t) >= 0.0);
    for (double t : {0.4, 0.7, 0.999999, 1.000001, 2.0, 100.0, 1e8})
        CHECK(omega_density(ro, t) >= 0.0);
    for (double t : {-1e8, -50.0, -2.1, -1.9, -1.0001, -0.5, 0.0, 7.0})
        CHECK(phi_density(rs, t) >= 0.0);
}

TEST_CASE("vanishing limits of sigma at both domain ends") {
    RatioParam r(0.5);
    CHECK(sigma_density(r, 1.0 + 1e-6) < 1e-2);
    CHECK(sigma_density(r, 1e8) < 1e-2);
    double prev = sigma_density(r, 1.0 + 1.0 / 1024);
    for (int k = 11; k <= 24; ++k) {
        double cur = sigma_density(r, 1.0 + std::ldexp(1.0, -k));
        CHECK(cur < prev);
        prev = cur;
    }
    prev = sigma_density(r, 1024.0);
    for (int k = 11; k <= 40; ++k) {
        double cur = sigma_density(r, std::ldexp(1.0, k));
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("omega is continuous at t = 1 with value 0, 1/|log eps| rate") {
    RatioParam r(2.5);
    CHECK(omega_density(r, 1.0) == 0.0);
    double prev_lo = 1.0, prev_hi = 1.0;
    for (double eps : {1e-6, 1e-9, 1e-12}) {
        double lo = omega_density(r, 1.0 - eps);
        double hi = omega_density(r, 1.0 + eps);
        CHECK(lo < 0.1);
        CHECK(hi < 0.1);
        CHECK(lo < prev_lo);
        CHECK(hi < prev_hi);
        prev_lo = lo;
        prev_hi = hi;
    }
}

TEST_CASE("reflection identity phi(-t) = t sigma(t)") {
    RatioParam r(0.3);
    for (double t : {1.0 + 1e-8, 1.2, 2.0, 3.3332, 3.3334, 5.0, 1e3, 1e9}) {
        double lhs = phi_density(r, -t);
        double rhs = t * sigma_density(r, t);
        CHECK(std::abs(lhs - rhs) <= 1e-14 * std::abs(rhs));
    }
}

TEST_CASE("t sigma decreases from near-knot to far field") {
    RatioParam r(0.5);
    CHECK(tsigma_density(r, 2.1) == doctest::Approx(kTSigma05At21).epsilon(1e-14));
    CHECK(tsigma_density(r, 100.0) == doctest::Approx(kTSigma05At100).epsilon(1e-14));
    CHECK(tsigma_density(r, 2.1) > tsigma_density(r, 100.0));
    CHECK(tsigma_density(r, 2.0) == kInf);
}

TEST_CASE("DensitySpec::make metadata") {
    auto s = DensitySpec::make(DensityKind::Sigma, RatioParam(0.5));
    REQUIRE(s.knots.size() == 2);
    CHECK(s.knots[0] == 1.0);
    CHECK(s.knots[1] == 2.0);
    REQUIRE(s.singularities.size() == 3);
    CHECK(s.singularities[1].location == 2.0);
    CHECK(s.singularities[1].type == SingType::LogDivergence);

    auto o = DensitySpec::make(DensityKind::Omega, RatioParam(2.5));
    CHECK(o.knots[0] == 0.4);
    CHECK(o.knots[1] == 1.0);

    auto p = DensitySpec::make(DensityKind::Phi, RatioParam(0.5));
    CHECK(p.knots[0] == -2.0);
    CHECK(p.knots[1] == -1.0);

    CHECK_THROWS_AS(DensitySpec::make(DensityKind::Sigma, RatioParam(2.5)),
                    std::domain_error);
    CHECK_THROWS_AS(DensitySpec::make(DensityKind::Omega, RatioParam(0.5)),
                    std::domain_error);
}

TEST_CASE("density_derivative signs, accuracy, and knot guards") {
    auto sig = DensitySpec::make(DensityKind::Sigma, RatioParam(0.5));
    auto tsig = DensitySpec::make(DensityKind::TSigma, RatioParam(0.5));
    auto om = DensitySpec::make(DensityKind::Omega, RatioParam(2.5));

    CHECK(density_derivative(sig, 1.9, 1e-4) > 0.0);
    CHECK(density_derivative(tsig, 1.5, 1e-4) > 0.0);
    CHECK(density_derivative(sig, 3.0, 1e-3) ==
          doctest::Approx(kDSigma05At3).epsilon(1e-10));
    CHECK_THROWS_AS(density_derivative(om, 1.0, 1e-4), std::domain_error);
    CHECK_THROWS_AS(density_derivative(sig, 2.0, 1e-4), std::domain_error);
    CHECK_THROWS_AS(density_derivative(sig, 1.9999, 1e-3), std::domain_error);

    auto phi = DensitySpec::make(DensityKind::Phi, RatioParam(0.5));
    CHECK(density_derivative(phi, 5.0, 1e-3) == 0.0);
}

TEST_CASE("panel forms match the point evaluators") {
    auto check_panels = [](const DensitySpec& spec) {
        for (const auto& pan : density_panels(spec)) {
            for (double frac : {1e-8, 0.21, 0.5, 0.83, 1.0 - 1e-8}) {
                double t = pan.a + frac * (pan.b - pan.a);
                double dl = t - pan.a, dr = pan.b - t;
                if (dl == 0.0 || dr == 0.0) continue;
                double want = density_eval(spec, t);
                double got = pan.eval(t, dl, dr);
                CHECK(std::abs(got - want) <= 1e-12 * std::max(1e-300, std::abs(want)));
            }
        }
    };
    check_panels(DensitySpec::make(DensityKind::Sigma, RatioParam(0.5)));
    check_panels(DensitySpec::make(DensityKind::Sigma, RatioParam(0.97)));
    check_panels(DensitySpec::make(DensityKind::TSigma, RatioParam(0.3)));
    check_panels(DensitySpec::make(DensityKind::Omega, RatioParam(2.5)));
    check_panels(DensitySpec::make(DensityKind::Omega, RatioParam(10.0)));
}

TEST_CASE("tail forms match the point evaluators in u coordinates") {
    auto sig = DensitySpec::make(DensityKind::Sigma, RatioParam(0.5));
    auto tail = density_tail(sig);
    CHECK_FALSE(tail.weight_scaled);
    for (double u : {tail.u0 + 0.1, 2.0, 5.0, 20.0, 100.0}) {
        double t = 1.0 + std::exp(u);
        double want = std::exp(u) * sigma_density(sig.param, t);
        CHECK(tail.eval_u(u) == doctest::Approx(want).epsilon(1e-12));
    }

    auto tsig = DensitySpec::make(DensityKind::TSigma, RatioParam(0.5));
    auto ttail = density_tail(tsig);
    CHECK(ttail.weight_scaled);
    for (double u : {ttail.u0 + 0.1, 3.0, 15.0}) {
        double t = 1.0 + std::exp(u);
        CHECK(ttail.eval_u(u) ==
              doctest::Approx(tsigma_density(tsig.param, t)).epsilon(1e-12));
    }

    auto om = DensitySpec::make(DensityKind::Omega, RatioParam(2.5));
    auto otail = density_tail(om);
    CHECK(otail.weight_scaled);
    for (double u : {otail.u0 + 0.1, 4.0, 25.0}) {
        double t = 1.0 + std::exp(u);
        CHECK(otail.eval_u(u) ==
              doctest::Approx(omega_density(om.param, t)).epsilon(1e-12));
    }

    // Far past double overflow of t itself the u-forms still evaluate.
    CHECK(std::isfinite(tail.eval_u(1e8)));
    CHECK(tail.eval_u(1e8) > 0.0);
}
