#include "logratio/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "logratio/pickcheck.hpp"

namespace logratio {

namespace {

constexpr double kDeadBand = 1e-12;

// n Chebyshev points of (a, b), ascending, all strictly interior.
std::vector<double> cheb_points(double a, double b, int n) {
    std::vector<double> t(n);
    const double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
    for (int k = 0; k < n; ++k)
        t[n - 1 - k] = mid + rad * std::cos(M_PI * (k + 0.5) / n);
    return t;
}

// m points log-spaced in (lo, hi) by the midpoint rule, endpoints excluded.
std::vector<double> log_grid(double lo, double hi, int m) {
    std::vector<double> g(m);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int j = 0; j < m; ++j)
        g[j] = std::exp(llo + (lhi - llo) * (j + 0.5) / m);
    return g;
}

}  // namespace

ScanReport monotonicity_scan(const DensitySpec& spec, double a, double b,
                             int n) {
    if (!(a < b))
        throw std::invalid_argument("monotonicity_scan: need a < b");
    if (n < 100)
        throw std::invalid_argument("monotonicity_scan: need n >= 100");
    for (double k : spec.knots)
        if (a < k && k < b)
            throw std::invalid_argument(
                "monotonicity_scan: interval crosses a knot");

    ScanReport rep{{a, b}, n, {}, true};
    const double hcap = 1e-3 * (b - a);
    int prev_sign = 0;
    double prev_t = a;
    for (double t : cheb_points(a, b, n)) {
        const double h = std::min({0.45 * (t - a), 0.45 * (b - t), hcap});
        const double d = density_derivative(spec, t, h);
        const int s = d > kDeadBand ? 1 : (d < -kDeadBand ? -1 : 0);
        if (s == 0) continue;
        if (prev_sign != 0 && s != prev_sign)
            rep.sign_changes.push_back(0.5 * (prev_t + t));
        prev_sign = s;
        prev_t = t;
    }
    rep.monotone = rep.sign_changes.empty();
    return rep;
}

bool sigma_monotone(double r, int n) {
    const RatioParam p(r);
    if (p.regime != Regime::SubUnit)
        throw std::domain_error("sigma_monotone: need 0 < r < 1");
    const auto spec = DensitySpec::make(DensityKind::Sigma, p);
    return monotonicity_scan(spec, 1 + 1e-6, 1 / r - 1e-6, n).monotone;
}

double find_r0(double lo, double hi, double tol, int n) {
    if (!(0 < lo && lo < hi && hi < 1) || !(tol > 0))
        throw std::invalid_argument("find_r0: need 0 < lo < hi < 1, tol > 0");
    if (sigma_monotone(lo, n) || !sigma_monotone(hi, n))
        throw std::invalid_argument(
            "find_r0: bracket does not straddle the transition");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (sigma_monotone(mid, n) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

TbfWitness tbf_witness(const RatioParam& p) {
    if (p.regime != Regime::SubUnit)
        throw std::domain_error("tbf_witness: need 0 < r < 1");
    TbfWitness w{};
    w.t_lo = 1.05 / p.r;
    w.v_lo = tsigma_density(p, w.t_lo);
    w.t_hi = std::max(100.0, 4.0 / p.r);
    for (int i = 0; i < 64; ++i) {
        w.v_hi = tsigma_density(p, w.t_hi);
        if (w.v_lo > w.v_hi) return w;
        w.t_hi *= 2;
    }
    // tsigma -> 0 at infinity while v_lo > 0, so the loop cannot fall through.
    throw std::runtime_error("tbf_witness: no decreasing pair found");
}

InequalityScan inequality_scan(const RatioParam& p, InequalityFamily which,
                               int samples) {
    if (samples <= 0)
        throw std::invalid_argument("inequality_scan: need samples > 0");
    const bool sub = which == InequalityFamily::SubUnitBound ||
                     which == InequalityFamily::SubUnitHalfPlane;
    if (p.regime == Regime::Unit || (p.regime == Regime::SubUnit) != sub)
        throw std::domain_error("inequality_scan: family/regime mismatch");

    InequalityScan out{0, std::numeric_limits<double>::infinity()};
    auto tally = [&out](double margin) {
        out.worst_margin = std::min(out.worst_margin, margin);
        if (margin < -kDeadBand) ++out.violations;
    };

    if (which == InequalityFamily::SubUnitHalfPlane ||
        which == InequalityFamily::SuperUnitHalfPlane) {
        const ScanGrid grid = ScanGrid::standard();
        const double orient = sub ? 1.0 : -1.0;
        for (double y : grid.im_points)
            for (double x : grid.re_points) {
                const Complex z{x, y};
                const Complex w1 = 1.0 + z, wr = 1.0 + p.r * z;
                const double lhs = std::log(std::abs(w1)) * std::arg(wr);
                const double rhs = std::log(std::abs(wr)) * std::arg(w1);
                tally(orient * (lhs - rhs));
            }
        return out;
    }

    // Bound inequality, displayed orientation on x > 0, reversed on the
    // negative subinterval.  side = +1 or -1 accordingly.
    const double L = cut_end(p);
    const double s = sub ? 1.0 : -1.0;
    auto margin_at = [&](double x, double side) {
        const double f = std::log1p(p.r * x) / std::log1p(x);
        double mgn = side * s * (p.r * (1 + x) / (1 + p.r * x) - f);
        if (sub) mgn = std::min(mgn, f);  // two-sided display: 0 < f as well
        return mgn;
    };
    const int m_neg = samples / 2, m_pos = samples - m_neg;
    for (double d : log_grid(1e-6 * -L, -L, m_neg)) tally(margin_at(L + d, -1.0));
    for (double x : log_grid(1e-6, 1e6, m_pos)) tally(margin_at(x, 1.0));
    return out;
}

double fd_derivative_check(const RatioParam& p, double x, int n) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("fd_derivative_check: need n in 1..3");
    if (!(x > cut_end(p)))
        throw std::domain_error("fd_derivative_check: x on or left of the cut");
    if (p.regime == Regime::Unit) return 0.0;  // f_1 is the constant 1
    const double r = p.r;
    if (n == 1) {
        if (std::abs(x) < 1e-4) {
            // f' = r[(1-r)/2 + (-1/6 - r/2 + 2r^2/3) x
            //        + (1/8 + r/8 + r^2/2 - 3r^3/4) x^2] + O(x^3)
            return r * ((1 - r) / 2 + (-1.0 / 6 - r / 2 + 2 * r * r / 3) * x +
                        (0.125 + r / 8 + r * r / 2 - 0.75 * r * r * r) * x * x);
        }
        const double l1 = std::log1p(x), lr = std::log1p(r * x);
        return (l1 * r / (1 + r * x) - lr / (1 + x)) / (l1 * l1);
    }
    auto f = [&](double t) { return f_direct(p, Complex{t, 0}).real(); };
    const double h = (n == 2 ? 0.02 : 0.015) * (x - cut_end(p));
    auto stencil = [&](double hh) {
        if (n == 2) return (f(x + hh) - 2 * f(x) + f(x - hh)) / (hh * hh);
        return (f(x + 2 * hh) - 2 * f(x + hh) + 2 * f(x - hh) - f(x - 2 * hh)) /
               (2 * hh * hh * hh);
    };
    return (4 * stencil(0.5 * h) - stencil(h)) / 3;
}

}  // namespace logratio
