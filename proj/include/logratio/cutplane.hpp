#pragma once

// Evaluation of f_r(z) = Log(1+rz)/Log(1+z) on its cut plane
// C \ (-inf, max(-1,-1/r)], principal branch, with the removable
// singularity at z = 0 handled by a truncated series quotient.

#include <array>
#include <complex>

namespace logratio {

using Complex = std::complex<double>;

enum class Regime { SubUnit, Unit, SuperUnit };

struct RatioParam {
    double r;
    Regime regime;

    explicit RatioParam(double r_);
};

// Right endpoint of the branch cut (-inf, cut_end]: max(-1, -1/r).
double cut_end(const RatioParam& p);

// True iff z lies in the holomorphy domain of f_r (off the closed cut).
bool domain_check(const RatioParam& p, Complex z);

// Principal logarithm, Arg in (-pi, pi); domain error on (-inf, 0].
Complex principal_log(Complex z);

// Log(1+z) without forming 1+z, cancellation-free for small |z|.
Complex log1p_complex(Complex z);

// f_r(z) anywhere in the cut plane; f_r(0) = r exactly.
Complex f_direct(const RatioParam& p, Complex z);

// Closed form for Im f_r(z), valid for Im z > 0:
//   (log|1+z| Arg(1+rz) - log|1+rz| Arg(1+z)) / (log^2|1+z| + Arg^2(1+z)).
double im_f_closed(const RatioParam& p, Complex z);

// Maclaurin coefficients q_0..q_10 of f_r, the quotient of the degree-10
// truncations of log(1+rz)/z and log(1+z)/z.
std::array<double, 11> f_series_coeffs(double r);

// |z| below this uses the series quotient (see f_direct).
inline constexpr double kSeriesThreshold = 1e-3;

}  // namespace logratio
