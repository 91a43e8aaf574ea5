#pragma once

// Grid diagnostics built on the densities and the direct evaluator: density
// monotonicity scans, the threshold ratio r0 below which sigma_r dips on
// (1, 1/r), explicit decreasing pairs of t*sigma_r (so f_r is never
// Thorin-Bernstein), sweeps of the bound and half-plane inequalities, and
// finite-difference derivative cross-checks.

#include <cstddef>
#include <utility>
#include <vector>

#include "logratio/densities.hpp"

namespace logratio {

struct ScanReport {
    std::pair<double, double> interval;
    int samples;
    std::vector<double> sign_changes;  // abscissae where the derivative flips sign
    bool monotone;                     // == sign_changes.empty()
};

// Signs of density_derivative at n Chebyshev points of (a, b), which must be
// a knot-free subinterval of the density's support and n >= 100.  |d| <= 1e-12
// counts as flat and never flips the sign.
ScanReport monotonicity_scan(const DensitySpec& spec, double a, double b, int n);

// True iff sigma_r is monotone on (1 + 1e-6, 1/r - 1e-6) per a scan with n
// nodes.  Requires 0 < r < 1.
bool sigma_monotone(double r, int n = 4000);

// Bisection abscissa where sigma_monotone flips from false to true; requires
// sigma_monotone(lo) false and sigma_monotone(hi) true.  A single transition
// is assumed: the predicate is evaluated only at bracket ends and midpoints,
// so non-monotonicity of the predicate itself cannot be observed here.
double find_r0(double lo, double hi, double tol, int n = 4000);

// A pair t_lo < t_hi with tsigma(t_lo) > tsigma(t_hi).  Such a pair exists
// for every 0 < r < 1 (tsigma diverges at 1/r and vanishes at infinity), so
// t*sigma_r is never increasing on its whole domain.
struct TbfWitness {
    double t_lo, t_hi;
    double v_lo, v_hi;
};
TbfWitness tbf_witness(const RatioParam& p);

enum class InequalityFamily {
    SubUnitBound,        // 0 < f_r(x) < r(1+x)/(1+rx), r < 1
    SubUnitHalfPlane,    // log|1+z| Arg(1+rz) > log|1+rz| Arg(1+z), Im z > 0
    SuperUnitBound,      // f_r(x) > r(1+x)/(1+rx), r > 1
    SuperUnitHalfPlane,  // reversed half-plane inequality, r > 1
};

struct InequalityScan {
    std::size_t violations;
    double worst_margin;
};

// Sweeps the family's inequality: bound families on log-spaced real grids
// over (max(-1,-1/r), 1e6) with the orientation reversed on the negative
// subinterval (dividing by log(1+x) flips the inequality where that log is
// negative), half-plane families on the standard 200x200 scan grid.  A
// margin below -1e-12 counts as a violation.
InequalityScan inequality_scan(const RatioParam& p, InequalityFamily which,
                               int samples);

// n-th derivative of f_r at x.  n = 1 uses the closed form
// (log(1+x) r/(1+rx) - log(1+rx)/(1+x)) / log^2(1+x), with a series fallback
// for |x| < 1e-4; n = 2, 3 use Richardson-extrapolated central differences
// of the direct evaluator with steps scaled to the distance from the cut.
double fd_derivative_check(const RatioParam& p, double x, int n);

}  // namespace logratio
