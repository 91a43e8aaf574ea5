#include "logratio/pickcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace logratio {

namespace {

void require_positive_im(const std::vector<double>& im_points) {
    for (double y : im_points)
        if (!(y > 0.0))
            throw std::invalid_argument("ScanGrid: im_points must be > 0");
}

}  // namespace

ScanGrid ScanGrid::standard() {
    ScanGrid g;
    const int n = 200;
    g.re_points.reserve(n);
    g.im_points.reserve(n);
    for (int i = 0; i < n; ++i) {
        g.re_points.push_back(-10.0 + 20.0 * i / (n - 1));
        // log-spaced on [1e-3, 10]
        g.im_points.push_back(std::pow(10.0, -3.0 + 4.0 * i / (n - 1)));
    }
    return g;
}

HalfplaneScan halfplane_scan(RatioParam r, const ScanGrid& grid) {
    if (grid.re_points.empty() || grid.im_points.empty())
        throw std::invalid_argument("halfplane_scan: empty grid");
    require_positive_im(grid.im_points);

    HalfplaneScan out{std::numeric_limits<double>::infinity(),
                      -std::numeric_limits<double>::infinity(),
                      {0.0, 0.0}};
    for (double x : grid.re_points) {
        for (double y : grid.im_points) {
            const Complex z{x, y};
            const double v = im_f_closed(r, z);
            if (v < out.min_im) {
                out.min_im = v;
                out.argmin = z;
            }
            if (v > out.max_im) out.max_im = v;
        }
    }
    return out;
}

double boundary_density_error(RatioParam r, double t, double y) {
    if (!(y > 0.0))
        throw std::invalid_argument("boundary_density_error: y must be > 0");
    switch (r.regime) {
        case Regime::SubUnit: {
            if (t == -1.0 || t == -1.0 / r.r)
                throw std::domain_error(
                    "boundary_density_error: t is a knot of phi");
            const double lim = (1.0 / M_PI) * im_f_closed(r, {t, y});
            return std::abs(lim - phi_density(r, t));
        }
        case Regime::SuperUnit: {
            if (t == 1.0 / r.r || t == 1.0)
                throw std::domain_error(
                    "boundary_density_error: t is a knot of omega");
            const double lim = -(1.0 / M_PI) * im_f_closed(r, {-t, y});
            const double w = t < 1.0 / r.r ? 0.0 : omega_density(r, t);
            return std::abs(lim - w);
        }
        case Regime::Unit:
            throw std::domain_error(
                "boundary_density_error: no density at r = 1");
    }
    throw std::logic_error("boundary_density_error: unreachable");
}

std::vector<double> point_mass_probe(RatioParam r, double a,
                                     const std::vector<double>& ys) {
    for (std::size_t i = 0; i + 1 < ys.size(); ++i)
        if (!(ys[i + 1] < ys[i]))
            throw std::invalid_argument(
                "point_mass_probe: ys must be strictly decreasing");
    std::vector<double> out;
    out.reserve(ys.size());
    for (double y : ys) {
        if (!(y > 0.0))
            throw std::invalid_argument("point_mass_probe: ys must be > 0");
        out.push_back(y * im_f_closed(r, {a, y}));
    }
    return out;
}

double beta_probe(RatioParam r, double y) {
    if (!(y >= 1.0))
        throw std::invalid_argument("beta_probe: y must be >= 1");
    const Complex iy{0.0, y};
    return std::abs(f_direct(r, iy) / iy);
}

double poisson_smooth(const CompactFn& g, double y, double t,
                      const QuadConfig& cfg) {
    if (!(y > 0.0))
        throw std::invalid_argument("poisson_smooth: y must be > 0");
    if (!(g.lo <= g.hi))
        throw std::invalid_argument("poisson_smooth: lo must be <= hi");
    if (g.lo == g.hi) return 0.0;

    // The kernel is a spike of width y at x = t.  Split the range at t (and
    // at the declared breaks of g) so the peak sits at a panel endpoint where
    // the nodes cluster, and express |t - x| through the panel-edge distances
    // so no cancellation occurs in t - x itself.
    std::vector<double> cuts{g.lo, g.hi};
    for (double b : g.breaks)
        if (b > g.lo && b < g.hi) cuts.push_back(b);
    if (t > g.lo && t < g.hi) cuts.push_back(t);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto kernel = [y](double d) { return y / (d * d + y * y); };
    QuadResult total{};
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i];
        const double b = cuts[i + 1];
        if (b <= t) {
            const double off = t - b;
            total += integrate_finite(
                [&](double x, double, double dr) {
                    return g.f(x) * kernel(off + dr);
                },
                a, b, {}, cfg);
        } else {
            const double off = a - t;  // >= 0: t is a cut point when inside
            total += integrate_finite(
                [&](double x, double dl, double) {
                    return g.f(x) * kernel(off + dl);
                },
                a, b, {}, cfg);
        }
    }
    return total.value / M_PI;
}

}  // namespace logratio
