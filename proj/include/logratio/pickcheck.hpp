#pragma once

// Half-plane diagnostics: sign scans of Im f over grids in H, recovery of the
// boundary densities from (1/pi) Im f(x+iy) as y -> 0+, point-mass probes
// y Im f(a+iy), the beta limit |f(iy)/iy|, and Poisson smoothing of compactly
// supported test functions.

#include <functional>
#include <vector>

#include "logratio/densities.hpp"
#include "logratio/quadrature.hpp"

namespace logratio {

struct ScanGrid {
    std::vector<double> re_points;
    std::vector<double> im_points;  // all strictly positive

    // 200 uniform real points on [-10, 10] x 200 log-spaced imaginary
    // points on [1e-3, 10].  The floor keeps im_f_closed well-conditioned.
    static ScanGrid standard();
};

struct HalfplaneScan {
    double min_im;
    double max_im;
    Complex argmin;  // grid point attaining min_im
};

// Extrema of Im f over the grid (every grid point lies in H, hence in the
// holomorphy domain).
HalfplaneScan halfplane_scan(RatioParam r, const ScanGrid& grid);

// |(1/pi) Im f(t+iy) - phi(t)| for r < 1; |-(1/pi) Im f(-t+iy) - omega(t)|
// for r > 1 (omega extended by 0 below 1/r, its vague limit there).
// Knots of the respective density are rejected.
double boundary_density_error(RatioParam r, double t, double y);

// y Im f(a+iy) for each y; ys must be strictly decreasing.  The limit is the
// point mass at a, which is 0 everywhere for this family.
std::vector<double> point_mass_probe(RatioParam r, double a,
                                     const std::vector<double>& ys);

// |f(iy)/(iy)|, the linear-coefficient probe; tends to beta = 0.
double beta_probe(RatioParam r, double y);

// A function with compact support [lo, hi].  Interior points where f is not
// smooth (kinks, jumps) go in breaks; the smoothing integral splits there.
struct CompactFn {
    std::function<double(double)> f;
    double lo;
    double hi;
    std::vector<double> breaks{};
};

// (1/pi) int y g(x)/((t-x)^2 + y^2) dx, the Poisson smoothing of g at t.
double poisson_smooth(const CompactFn& g, double y, double t,
                      const QuadConfig& cfg = {});

}  // namespace logratio
