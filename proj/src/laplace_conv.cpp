#include "logratio/laplace_conv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "logratio/cutplane.hpp"

namespace logratio {

namespace {

void require_subunit(RatioParam r, const char* who) {
    if (r.regime != Regime::SubUnit)
        throw std::domain_error(std::string(who) + ": requires r < 1");
}

// Laplace transform of a density over its whole domain.  The kernel makes the
// far tail exponentially easy: truncating where s*t = 60 costs under e^-60
// relative to the captured mass.
double laplace_density(const DensitySpec& spec, double lam,
                       const QuadConfig& cfg) {
    QuadResult total{};
    for (const auto& pan : density_panels(spec))
        total += integrate_finite(
            [&pan, lam](double t, double dl, double dr) {
                return pan.eval(t, dl, dr) * std::exp(-lam * t);
            },
            pan.a, pan.b, pan.hints, cfg);

    const DensityTailU tail = density_tail(spec);
    const double umax = std::log(60.0 / lam);  // lam*(1+e^u) reaches lam+60
    if (umax > tail.u0) {
        const double llam = std::log(lam);
        total += integrate_finite(
            [&tail, lam, llam](double u) {
                // lam*e^u formed as exp(u + log lam) <= 60, never via e^u
                const double lt = std::exp(u + llam);
                return tail.weight_scaled
                           ? tail.eval_u(u) * std::exp(u - lam - lt)
                           : tail.eval_u(u) * std::exp(-lam - lt);
            },
            tail.u0, umax, {}, cfg);
    }
    return total.value;
}

// int_0^d h(lam) dlam by Laplace order swap:
// int omega_{1/r}(u) (1 - e^{-(d/r)u}) / u du over the omega domain.  This is
// how the convolution reaches under its endpoint singularity h ~ 1/(s log^2 s),
// whose mass below any quadrature node floor is otherwise O(1/log).
QuadResult h_head_mass(RatioParam r, double d, const QuadConfig& cfg) {
    const RatioParam rho(1.0 / r.r);
    const double mu = d / r.r;
    const auto spec = DensitySpec::make(DensityKind::Omega, rho);
    return integrate_density_full(
        spec, [mu](double u) { return -std::expm1(-mu * u) / u; }, cfg);
}

}  // namespace

double g_fn(RatioParam r, double s, const QuadConfig& cfg) {
    require_subunit(r, "g_fn");
    if (!(s > 0.0)) throw std::domain_error("g_fn: s must be > 0");
    const auto spec = DensitySpec::make(DensityKind::Sigma, r);
    return r.r + laplace_density(spec, s, cfg);
}

double h_fn(RatioParam r, double s, const QuadConfig& cfg) {
    require_subunit(r, "h_fn");
    if (!(s > 0.0)) throw std::domain_error("h_fn: s must be > 0");
    // u = rt maps the integral onto the omega domain: (1/r) L[omega_{1/r}](s/r)
    const RatioParam rho(1.0 / r.r);
    const auto spec = DensitySpec::make(DensityKind::Omega, rho);
    return laplace_density(spec, s / r.r, cfg) / r.r;
}

ConvResidual convolution_residual(RatioParam r, double x,
                                  const QuadConfig& cfg) {
    require_subunit(r, "convolution_residual");
    if (!(x > 0.0))
        throw std::domain_error("convolution_residual: x must be > 0");

    constexpr double delta = 1e-8;  // width of the analytic endpoint slice
    const double gx = g_fn(r, x, cfg);

    double conv, conv_err;
    if (x > 100.0 * delta) {
        // per-call memo tables; nested quadrature re-visits abscissas
        std::unordered_map<double, double> gmemo, hmemo;
        auto g_at = [&](double s) {
            auto it = gmemo.find(s);
            if (it == gmemo.end())
                it = gmemo.emplace(s, g_fn(r, s, cfg)).first;
            return it->second;
        };
        auto h_at = [&](double lam) {
            auto it = hmemo.find(lam);
            if (it == hmemo.end())
                it = hmemo.emplace(lam, h_fn(r, lam, cfg)).first;
            return it->second;
        };

        // inner values carry quadrature noise; do not chase it in the outer
        QuadConfig outer_cfg = cfg;
        outer_cfg.abs_tol = std::max(cfg.abs_tol, 1e-9);
        outer_cfg.rel_tol = std::max(cfg.rel_tol, 1e-9);

        const QuadResult outer = integrate_finite(
            [&](double s, double, double dr) {
                return g_at(s) * h_at(dr + delta);  // x-s = dr+delta exactly
            },
            0.0, x - delta, {}, outer_cfg);
        // last slice: int_0^delta g(x-lam) h(lam) dlam = g(x) * head mass,
        // off by |g'(x)| * delta/log^2(delta) ~ 1e-11
        const QuadResult head = h_head_mass(r, delta, cfg);
        conv = outer.value + gx * head.value;
        conv_err = outer.err_est + gx * head.err_est + x * 1e-10 + 1e-10;
    } else {
        // whole range lies inside the analytic slice
        const QuadResult head = h_head_mass(r, x, cfg);
        const double gmid = g_fn(r, 0.5 * x, cfg);
        conv = gmid * head.value;
        // quadrature error plus a bound on the drift of g across the slice
        conv_err = gmid * head.err_est +
                   std::abs(gx - g_fn(r, 0.25 * x, cfg)) * head.value;
    }

    return {x, gx + conv - 1.0, conv_err};
}

double reciprocity_residual(RatioParam r, double x) {
    if (!(x > 0.0))
        throw std::invalid_argument("reciprocity_residual: x must be > 0");
    const double a = f_direct(r, {x, 0.0}).real();
    const double b = f_direct(RatioParam(1.0 / r.r), {r.r * x, 0.0}).real();
    return std::abs(a * b - 1.0);
}

}  // namespace logratio
