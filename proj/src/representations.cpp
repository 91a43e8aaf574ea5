#include "logratio/representations.hpp"

#include <cmath>

namespace logratio {

namespace {

void require_regime(RatioParam r, Regime want, const char* who) {
    if (r.regime != want)
        throw std::domain_error(std::string(who) + ": wrong regime for r = " +
                                std::to_string(r.r));
}

void require_not_unit(RatioParam r, const char* who) {
    if (r.regime == Regime::Unit)
        throw std::domain_error(std::string(who) +
                                ": r = 1 has no representation (f is constant 1)");
}

void require_domain(RatioParam r, Complex z, const char* who) {
    if (!domain_check(r, z))
        throw std::domain_error(std::string(who) +
                                ": z outside the holomorphy domain");
}

// Re and Im of a complex weight integrated separately against the density;
// the imaginary pass is skipped for real weights on real arguments.
Complex integrate_complex(const DensitySpec& spec,
                          const std::function<Complex(double)>& w, bool is_real,
                          const QuadConfig& cfg) {
    auto re = integrate_density_full(
        spec, [&w](double t) { return w(t).real(); }, cfg);
    if (is_real) return {re.value, 0.0};
    auto im = integrate_density_full(
        spec, [&w](double t) { return w(t).imag(); }, cfg);
    return {re.value, im.value};
}

}  // namespace

double alpha(RatioParam r) {
    const double l2 = M_LN2;
    return (l2 * std::log1p(r.r * r.r) + M_PI * std::atan(r.r)) /
           (l2 * l2 + M_PI * M_PI / 4.0);
}

PickData make_pick_data(RatioParam r) {
    require_regime(r, Regime::SubUnit, "make_pick_data");
    return {alpha(r), 0.0, DensitySpec::make(DensityKind::Phi, r), {}};
}

MeasureRep make_measure_rep(RatioParam r) {
    require_not_unit(r, "make_measure_rep");
    if (r.regime == Regime::SubUnit)
        return {r.r, DensitySpec::make(DensityKind::Sigma, r)};
    return {0.0, DensitySpec::make(DensityKind::Omega, r)};
}

Complex eval_rep(RatioParam r, Complex z, const QuadConfig& cfg) {
    require_not_unit(r, "eval_rep");
    require_domain(r, z, "eval_rep");
    if (r.regime == Regime::SubUnit) {
        if (z == Complex(0.0, 0.0)) return {r.r, 0.0};
        auto spec = DensitySpec::make(DensityKind::Sigma, r);
        // The sigma tail passes t = +inf to plain weights; the limit is 0.
        auto w = [z](double t) -> Complex {
            return std::isinf(t) ? Complex(0.0, 0.0) : z / (z + t);
        };
        return Complex(r.r, 0.0) + integrate_complex(spec, w, z.imag() == 0.0, cfg);
    }
    auto spec = DensitySpec::make(DensityKind::Omega, r);
    auto w = [z](double t) -> Complex {
        return std::isinf(t) ? Complex(0.0, 0.0) : 1.0 / (z + t);
    };
    return Complex(1.0, 0.0) + integrate_complex(spec, w, z.imag() == 0.0, cfg);
}

Complex eval_one_minus_rep(RatioParam r, Complex z, const QuadConfig& cfg) {
    require_regime(r, Regime::SubUnit, "eval_one_minus_rep");
    require_domain(r, z, "eval_one_minus_rep");
    auto spec = DensitySpec::make(DensityKind::TSigma, r);
    auto w = [z](double t) -> Complex { return 1.0 / (z + t); };
    return Complex(1.0, 0.0) - integrate_complex(spec, w, z.imag() == 0.0, cfg);
}

Complex eval_f_over_z_rep(RatioParam r, Complex z, const QuadConfig& cfg) {
    require_regime(r, Regime::SubUnit, "eval_f_over_z_rep");
    require_domain(r, z, "eval_f_over_z_rep");
    if (z == Complex(0.0, 0.0))
        throw std::domain_error("eval_f_over_z_rep: z must be nonzero");
    auto spec = DensitySpec::make(DensityKind::Sigma, r);
    auto w = [z](double t) -> Complex {
        return std::isinf(t) ? Complex(0.0, 0.0) : 1.0 / (z + t);
    };
    return r.r / z + integrate_complex(spec, w, z.imag() == 0.0, cfg);
}

Complex eval_pick_rep(RatioParam r, Complex z, const QuadConfig& cfg) {
    require_regime(r, Regime::SubUnit, "eval_pick_rep");
    if (!(z.imag() > 0.0) && !(z.imag() == 0.0 && z.real() > -1.0))
        throw std::domain_error(
            "eval_pick_rep: need Im z > 0 or real z in (-1, inf)");
    auto spec = DensitySpec::make(DensityKind::TSigma, r);
    // t/(1+t^2) - 1/(t+z) combined into one quotient: the pieces cancel to
    // O(1/t^2) individually and would lose digits subtracted at large t.
    // Past t ~ 1e150 the quotient is below every underflow threshold but its
    // denominator overflows, so return the limit directly.
    auto w = [z](double t) -> Complex {
        if (t > 1e150) return {0.0, 0.0};
        return (z * t - 1.0) / ((1.0 + t * t) * (t + z));
    };
    return alpha(r) + integrate_complex(spec, w, z.imag() == 0.0, cfg);
}

std::vector<IdentityResidual> mass_identities(RatioParam r, const QuadConfig& cfg) {
    require_not_unit(r, "mass_identities");
    std::vector<IdentityResidual> out;
    if (r.regime == Regime::SubUnit) {
        auto sig = DensitySpec::make(DensityKind::Sigma, r);
        auto m0 = integrate_density_full(sig, [](double) { return 1.0; }, cfg);
        out.push_back({"sigma_total_mass", std::abs(m0.value - (1.0 - r.r)),
                       m0.err_est});
        auto m1 = integrate_density_full(
            sig, [](double t) { return 1.0 / (1.0 + t * t); }, cfg);
        out.push_back({"sigma_cauchy_mass", std::abs(m1.value - (alpha(r) - r.r)),
                       m1.err_est});
    } else {
        auto om = DensitySpec::make(DensityKind::Omega, r);
        auto m = integrate_density_full(om, [](double t) { return 1.0 / t; }, cfg);
        out.push_back({"omega_inverse_moment", std::abs(m.value - (r.r - 1.0)),
                       m.err_est});
    }
    return out;
}

double derivative_rep(RatioParam r, double x, int n, const QuadConfig& cfg) {
    require_not_unit(r, "derivative_rep");
    if (n < 1 || n > 20)
        throw std::invalid_argument("derivative_rep: n must be in [1, 20]");
    require_domain(r, {x, 0.0}, "derivative_rep");
    const double nfac = std::tgamma(static_cast<double>(n) + 1.0);
    const double p = -static_cast<double>(n + 1);
    auto w = [x, p](double t) { return std::pow(x + t, p); };
    if (r.regime == Regime::SubUnit) {
        auto spec = DensitySpec::make(DensityKind::TSigma, r);
        const double sign = n % 2 == 1 ? 1.0 : -1.0;
        return sign * nfac * integrate_density_full(spec, w, cfg).value;
    }
    auto spec = DensitySpec::make(DensityKind::Omega, r);
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    return sign * nfac * integrate_density_full(spec, w, cfg).value;
}

double bernstein_m(RatioParam r, double s, const QuadConfig& cfg) {
    require_regime(r, Regime::SubUnit, "bernstein_m");
    if (!(s > 0.0)) throw std::domain_error("bernstein_m: s must be positive");
    auto spec = DensitySpec::make(DensityKind::TSigma, r);
    auto w = [s](double t) { return std::exp(-s * t); };
    const double T0 = 2.0 / r.r;  // density tail start, past the 1/r knot
    if (1.0 / s < 4.0 * T0)
        return integrate_density_full(spec, w, cfg).value;
    // For small s the e^{-st} knee at t = 1/s sits deep inside the tail,
    // where the generic v = 1/u substitution cannot resolve it.  Integrate
    // the tail in two pieces instead: u-space up to the knee, then tau = st.
    QuadResult total{};
    for (const auto& pan : density_panels(spec))
        total += integrate_finite(
            [&pan, &w](double t, double dl, double dr) {
                return pan.eval(t, dl, dr) * w(t);
            },
            pan.a, pan.b, pan.hints, cfg);
    const DensityTailU tail = density_tail(spec);  // eval_u = tsigma(1+e^u)
    const double ustar = std::log1p(-s) - std::log(s);  // log(1/s - 1)
    total += integrate_finite(
        [&tail, s](double u) {
            return tail.eval_u(u) * std::exp(u - s - s * std::exp(u));
        },
        tail.u0, ustar, {}, cfg);
    // Beyond the knee, t sigma(tau/s) evaluated in log form keeps every
    // intermediate finite; e^{-60} bounds the discarded remainder.
    const double lr = std::log(r.r);
    const double ls = std::log(s);
    const double knot = 1.0 / r.r;
    constexpr double pi2 = M_PI * M_PI;
    total += integrate_finite(
        [s, lr, ls, knot](double tau) {
            const double L = std::log(tau - s) - ls;
            const double num =
                std::log(tau - s) - lr - std::log(tau - s * knot);
            return num / (L * L + pi2) / s * std::exp(-tau);
        },
        1.0, 60.0, {}, cfg);
    return total.value;
}

double eval_bernstein_rep(RatioParam r, double x, const QuadConfig& cfg) {
    require_regime(r, Regime::SubUnit, "eval_bernstein_rep");
    if (!(x > 0.0))
        throw std::domain_error("eval_bernstein_rep: x must be positive");
    QuadConfig outer = cfg;
    outer.abs_tol = std::max(cfg.abs_tol, 1e-6);
    outer.rel_tol = std::max(cfg.rel_tol, 1e-6);
    auto m = [&r, &cfg](double s) { return bernstein_m(r, s, cfg); };
    // (1-e^{-xs}) m(s) -> x/log^2 s as s -> 0: continuous, no divergence.
    auto head = integrate_finite(
        [&](double s) { return s == 0.0 ? 0.0 : -std::expm1(-x * s) * m(s); }, 0.0,
        1.0, {}, outer);
    // s = e^w beyond s = 1; m decays like e^{-s}, so w <= 8 exhausts it.
    auto tail = integrate_finite(
        [&](double w) {
            const double s = std::exp(w);
            return -std::expm1(-x * s) * m(s) * s;
        },
        0.0, 8.0, {}, outer);
    return r.r + head.value + tail.value;
}

}  // namespace logratio
