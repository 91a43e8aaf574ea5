#include "logratio/quadrature.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>

namespace logratio {

namespace {

constexpr double kPi2 = M_PI * M_PI;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxLevel = 17;

// Tanh-sinh node: complement xc = 1-|x| of the abscissa x = tanh((pi/2)sinh(jh))
// and the h-free weight wp = (pi/2) cosh(jh)/cosh^2((pi/2)sinh(jh)).  Nodes of
// level L (h = 2^-L, odd j only for L > 0) refine the union of earlier levels,
// so the trapezoid value at level L is h * (sum of wp*f over all nodes so far).
struct Node {
    double xc;
    double wp;
};

const std::vector<Node>& level_nodes(int level) {
    static std::array<std::vector<Node>, kMaxLevel + 1> tables;
    static std::array<std::atomic<bool>, kMaxLevel + 1> ready{};
    static std::mutex mu;
    if (!ready[level].load(std::memory_order_acquire)) {
        std::lock_guard<std::mutex> lock(mu);
        if (!ready[level].load(std::memory_order_relaxed)) {
            std::vector<Node> v;
            const double h = std::ldexp(1.0, -level);
            for (long j = level == 0 ? 0 : 1;; j += level == 0 ? 1 : 2) {
                const double jh = static_cast<double>(j) * h;
                const double w = M_PI_2 * std::sinh(jh);
                const double em = std::exp(-2.0 * w);
                const double xc = 2.0 * em / (1.0 + em);
                if (xc < 1e-290) break;
                v.push_back({xc, 2.0 * M_PI * std::cosh(jh) * em / ((1.0 + em) * (1.0 + em))});
            }
            tables[level] = std::move(v);
            ready[level].store(true, std::memory_order_release);
        }
    }
    return tables[level];
}

void validate_cfg(const QuadConfig& cfg) {
    if (!(cfg.abs_tol >= 1e-14) || !(cfg.rel_tol >= 1e-14))
        throw std::invalid_argument("QuadConfig: tolerances must be >= 1e-14");
    if (cfg.max_subdivisions <= 0 || cfg.max_subdivisions > 1000000)
        throw std::invalid_argument("QuadConfig: max_subdivisions must be in [1, 1e6]");
    if (!(cfg.tail_cutoff_u > 0.0))
        throw std::invalid_argument("QuadConfig: tail_cutoff_u must be positive");
}

}  // namespace

QuadResult integrate_finite(const PanelFn& f, double a, double b,
                            const std::vector<Singularity>& hints,
                            const QuadConfig& cfg) {
    (void)hints;  // tanh-sinh absorbs integrable endpoint singularities as-is
    validate_cfg(cfg);
    if (!std::isfinite(a) || !std::isfinite(b) || !(a <= b))
        throw std::invalid_argument("integrate_finite: need finite a <= b");
    if (a == b) return {};

    const double half = 0.5 * (b - a);
    const double len = b - a;
    long double sum = 0.0L, l1 = 0.0L;
    long evals = 0;
    double prev = 0.0;
    QuadResult best{};

    auto sample = [&](double t, double dl, double dr, double wp) {
        // A node whose abscissa rounded onto an endpoint can blow up or throw
        // in plain integrands even though its true position is interior; its
        // contribution is below the noise floor, so drop it.  Anything
        // non-finite strictly inside the panel is the caller's bug.
        const bool at_end = t == a || t == b;
        double v;
        if (at_end) {
            try {
                v = f(t, dl, dr);
            } catch (const std::domain_error&) {
                return;
            }
        } else {
            v = f(t, dl, dr);
        }
        if (!std::isfinite(v)) {
            if (at_end || std::min(dl, dr) < 1e-200) return;
            throw std::domain_error("integrate_finite: integrand non-finite at t = " +
                                    std::to_string(t));
        }
        sum += static_cast<long double>(wp) * v;
        l1 += static_cast<long double>(wp) * std::abs(v);
    };

    for (int level = 0; level <= kMaxLevel; ++level) {
        const auto& nodes = level_nodes(level);
        const double h = std::ldexp(1.0, -level);
        size_t i = 0;
        if (level == 0) {  // center node j = 0, counted once
            sample(a + half, half, half, nodes[0].wp);
            ++evals;
            i = 1;
        }
        for (; i < nodes.size(); ++i) {
            const double d = half * nodes[i].xc;  // distance to the near endpoint
            if (d == 0.0) continue;
            // t may round onto the endpoint; the exact distances keep
            // distance-aware integrands accurate there, so never skip.
            const double thi = b - d;
            sample(thi < b ? thi : b, len - d, d, nodes[i].wp);
            ++evals;
            const double tlo = a + d;
            sample(tlo > a ? tlo : a, d, len - d, nodes[i].wp);
            ++evals;
        }
        const double value = half * h * static_cast<double>(sum);
        const double l1v = half * h * static_cast<double>(l1);
        if (level >= 1) {
            const double err = std::abs(value - prev);
            best = {value, std::max(err, kEps * l1v), evals};
            if (level >= 2) {
                const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
                if (err <= tol || err <= 8.0 * kEps * l1v) return best;
            }
        } else {
            best = {value, std::abs(value) + l1v, evals};
        }
        prev = value;
        if (evals >= cfg.max_subdivisions) break;
    }
    throw QuadratureError("integrate_finite: no convergence within the evaluation budget",
                          best);
}

QuadResult integrate_finite(const std::function<double(double)>& f, double a,
                            double b, const std::vector<Singularity>& hints,
                            const QuadConfig& cfg) {
    return integrate_finite([&f](double t, double, double) { return f(t); }, a, b,
                            hints, cfg);
}

QuadResult integrate_tail_u(const std::function<double(double)>& g, double u0,
                            const QuadConfig& cfg) {
    validate_cfg(cfg);
    if (!(u0 < 1e7))
        throw std::invalid_argument("integrate_tail_u: tail start too deep");
    QuadResult total{};
    const double ucut = std::max(u0, cfg.tail_cutoff_u);
    if (u0 < ucut)
        total += integrate_finite([&g](double u, double, double) { return g(u); }, u0,
                                  ucut, {}, cfg);
    // v = 1/u maps (ucut, 1e8) to a bounded smooth panel.
    constexpr double vmin = 1e-8;
    total += integrate_finite(
        [&g](double v, double, double) {
            const double u = 1.0 / v;
            return g(u) / (v * v);
        },
        vmin, 1.0 / ucut, {}, cfg);
    // Analytic closure past u1 = 1e8: g there is c/(u^2+pi^2) up to O(e^-u1).
    constexpr double u1 = 1.0 / vmin;
    const double c = g(u1) * (u1 * u1 + kPi2);
    const double rem = c * (M_PI_2 - std::atan(u1 / M_PI)) / M_PI;
    total.value += rem;
    total.err_est += 1e-11 * std::abs(rem);
    total.evals += 1;
    return total;
}

QuadResult integrate_density_tail(const std::function<double(double)>& f, double T,
                                  const QuadConfig& cfg) {
    if (!(T > 1.0) || !std::isfinite(T))
        throw std::invalid_argument("integrate_density_tail: need finite T > 1");
    // t = 1+e^u overflows past u ~ 709; past 600 replace f by its own
    // c/(u^2+pi^2) model with c frozen at u = 600 (exact up to O(e^-600)).
    auto g = [&f, c = std::numeric_limits<double>::quiet_NaN()](double u) mutable {
        if (u <= 600.0) {
            const double eu = std::exp(u);
            return f(1.0 + eu) * eu;
        }
        if (std::isnan(c)) {
            const double eu = std::exp(600.0);
            c = f(1.0 + eu) * eu * (600.0 * 600.0 + kPi2);
        }
        return c / (u * u + kPi2);
    };
    return integrate_tail_u(g, std::log(T - 1.0), cfg);
}

QuadResult integrate_density_full(const DensitySpec& spec,
                                  const std::function<double(double)>& weight,
                                  const QuadConfig& cfg) {
    const bool reflected = spec.kind == DensityKind::Phi;
    const DensitySpec s =
        reflected ? DensitySpec::make(DensityKind::TSigma, spec.param) : spec;
    auto wt = [&weight, reflected](double t) {
        return reflected ? weight(-t) : weight(t);
    };

    QuadResult total{};
    for (const auto& pan : density_panels(s)) {
        total += integrate_finite(
            [&pan, &wt](double t, double dl, double dr) {
                return pan.eval(t, dl, dr) * wt(t);
            },
            pan.a, pan.b, pan.hints, cfg);
    }

    const DensityTailU tail = density_tail(s);
    std::function<double(double)> g;
    if (!tail.weight_scaled) {
        // eval_u already carries e^u; the plain weight must tolerate t = +inf.
        g = [eval = tail.eval_u, wt](double u) {
            const double t =
                u <= 709.0 ? 1.0 + std::exp(u) : std::numeric_limits<double>::infinity();
            return eval(u) * wt(t);
        };
    } else {
        // Fold e^u * w(1+e^u); its limit is frozen at u = 600 before t overflows.
        g = [eval = tail.eval_u, wt,
             csw = std::numeric_limits<double>::quiet_NaN()](double u) mutable {
            double swv;
            if (u <= 600.0) {
                const double eu = std::exp(u);
                swv = eu * wt(1.0 + eu);
            } else {
                if (std::isnan(csw)) {
                    const double eu = std::exp(600.0);
                    csw = eu * wt(1.0 + eu);
                }
                swv = csw;
            }
            return eval(u) * swv;
        };
    }
    total += integrate_tail_u(g, tail.u0, cfg);
    return total;
}

}  // namespace logratio
