#include "logratio/cutplane.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace logratio {

RatioParam::RatioParam(double r_) : r(r_) {
    if (!(r_ > 0.0) || !std::isfinite(r_))
        throw std::domain_error("RatioParam: r must be positive and finite");
    regime = r_ < 1.0 ? Regime::SubUnit : (r_ > 1.0 ? Regime::SuperUnit : Regime::Unit);
}

double cut_end(const RatioParam& p) {
    return std::max(-1.0, -1.0 / p.r);
}

bool domain_check(const RatioParam& p, Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return !(z.imag() == 0.0 && z.real() <= cut_end(p));
}

Complex principal_log(Complex z) {
    if (z.imag() == 0.0 && z.real() <= 0.0)
        throw std::domain_error("principal_log: argument on the cut (-inf, 0]");
    return std::log(z);
}

Complex log1p_complex(Complex z) {
    const double x = z.real(), y = z.imag();
    // |1+z|^2 - 1 = 2x + x^2 + y^2, so log|1+z| = log1p(2x + x^2 + y^2)/2.
    return {0.5 * std::log1p(2.0 * x + x * x + y * y), std::atan2(y, 1.0 + x)};
}

std::array<double, 11> f_series_coeffs(double r) {
    // n_k, d_k: coefficients of log(1+rz)/z and log(1+z)/z truncated at degree 10.
    std::array<double, 11> n{}, d{}, q{};
    double rp = r;
    for (int k = 0; k <= 10; ++k) {
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        n[k] = sgn * rp / (k + 1);
        d[k] = sgn / (k + 1);
        rp *= r;
    }
    for (int k = 0; k <= 10; ++k) {
        double s = n[k];
        for (int j = 0; j < k; ++j) s -= q[j] * d[k - j];
        q[k] = s;
    }
    return q;
}

namespace {

void require_in_domain(const RatioParam& p, Complex z, const char* who) {
    if (!domain_check(p, z))
        throw std::domain_error(std::string(who) + ": z on the cut (-inf, " +
                                std::to_string(cut_end(p)) + "] or non-finite");
}

}  // namespace

Complex f_direct(const RatioParam& p, Complex z) {
    require_in_domain(p, z, "f_direct");
    const double az = std::abs(z);
    if (az == 0.0) return {p.r, 0.0};
    // Series quotient near 0 (valid inside radius 1/r, hence the r|z| guard).
    if (az < kSeriesThreshold && p.r * az < 0.5) {
        const auto q = f_series_coeffs(p.r);
        Complex acc{q[10], 0.0};
        for (int k = 9; k >= 0; --k) acc = acc * z + q[k];
        if (z.imag() == 0.0) return {acc.real(), 0.0};
        return acc;
    }
    const Complex num = log1p_complex(p.r * z);
    const Complex den = log1p_complex(z);
    if (z.imag() == 0.0) return {num.real() / den.real(), 0.0};
    return num / den;
}

double im_f_closed(const RatioParam& p, Complex z) {
    if (!(z.imag() > 0.0))
        throw std::domain_error("im_f_closed: requires Im z > 0");
    const Complex lden = log1p_complex(z);
    const Complex lnum = log1p_complex(p.r * z);
    const double a = lden.real(), b = lden.imag();  // log|1+z|, Arg(1+z)
    const double c = lnum.real(), d = lnum.imag();  // log|1+rz|, Arg(1+rz)
    return (a * d - c * b) / (a * a + b * b);
}

}  // namespace logratio
