#include "logratio/densities.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace logratio {

namespace {

constexpr double kPi2 = M_PI * M_PI;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_regime(const RatioParam& p, Regime want, const char* who) {
    if (p.regime != want)
        throw std::domain_error(std::string(who) + ": wrong regime for r = " +
                                std::to_string(p.r));
}

}  // namespace

double sigma_density(const RatioParam& p, double t) {
    require_regime(p, Regime::SubUnit, "sigma_density");
    if (!(t > 1.0)) throw std::domain_error("sigma_density: t must be > 1");
    const double knot = 1.0 / p.r;
    if (t == knot) return kInf;
    const double lt1 = std::log(t - 1.0);
    const double den = t * (lt1 * lt1 + kPi2);
    // -log(1-rt) = -log r - log(1/r - t); log((t-1)/(rt-1)) = lt1 - log r - log(t - 1/r)
    const double num = t < knot ? -std::log(p.r) - std::log(knot - t)
                                : lt1 - std::log(p.r) - std::log(t - knot);
    return num / den;
}

double tsigma_density(const RatioParam& p, double t) {
    require_regime(p, Regime::SubUnit, "tsigma_density");
    if (!(t > 1.0)) throw std::domain_error("tsigma_density: t must be > 1");
    const double knot = 1.0 / p.r;
    if (t == knot) return kInf;
    const double lt1 = std::log(t - 1.0);
    const double den = lt1 * lt1 + kPi2;
    const double num = t < knot ? -std::log(p.r) - std::log(knot - t)
                                : lt1 - std::log(p.r) - std::log(t - knot);
    return num / den;
}

double omega_density(const RatioParam& p, double t) {
    require_regime(p, Regime::SuperUnit, "omega_density");
    const double edge = 1.0 / p.r;
    if (!(t >= edge)) throw std::domain_error("omega_density: t must be >= 1/r");
    if (t == 1.0) return 0.0;
    if (t < 1.0) return -1.0 / std::log(1.0 - t);
    const double lt1 = std::log(t - 1.0);
    // log((rt-1)/(t-1)) = log r + log(t - 1/r) - lt1
    const double num = std::log(p.r) + std::log(t - edge) - lt1;
    return num / (lt1 * lt1 + kPi2);
}

double phi_density(const RatioParam& p, double t) {
    require_regime(p, Regime::SubUnit, "phi_density");
    if (t >= -1.0) return 0.0;
    const double knot = -1.0 / p.r;
    if (t == knot) return kInf;
    const double d1 = -t - 1.0;
    const double den = std::log(d1) * std::log(d1) + kPi2;
    // -log(1+rt) = -log r - log(t + 1/r); log((-t-1)/(-1-rt)) uses -1-rt = r(-t-1/r)
    const double num = t > knot ? -std::log(p.r) - std::log(t - knot)
                                : std::log(d1) - std::log(p.r) - std::log(-t + knot);
    return num / den;
}

double density_eval(const DensitySpec& spec, double t) {
    switch (spec.kind) {
        case DensityKind::Sigma: return sigma_density(spec.param, t);
        case DensityKind::Omega: return omega_density(spec.param, t);
        case DensityKind::Phi: return phi_density(spec.param, t);
        case DensityKind::TSigma: return tsigma_density(spec.param, t);
    }
    throw std::logic_error("density_eval: unknown kind");
}

DensitySpec DensitySpec::make(DensityKind kind, const RatioParam& p) {
    const double inv = 1.0 / p.r;
    switch (kind) {
        case DensityKind::Sigma:
        case DensityKind::TSigma:
            if (p.regime != Regime::SubUnit)
                throw std::domain_error("DensitySpec: Sigma/TSigma need r < 1");
            return {kind, p, {1.0, inv},
                    {{1.0, SingType::ZeroLimit},
                     {inv, SingType::LogDivergence},
                     {kInf, SingType::ZeroLimit}}};
        case DensityKind::Omega:
            if (p.regime != Regime::SuperUnit)
                throw std::domain_error("DensitySpec: Omega needs r > 1");
            return {kind, p, {inv, 1.0},
                    {{inv, SingType::Kink}, {1.0, SingType::ZeroLimit}}};
        case DensityKind::Phi:
            if (p.regime != Regime::SubUnit)
                throw std::domain_error("DensitySpec: Phi needs r < 1");
            return {kind, p, {-inv, -1.0},
                    {{-inv, SingType::LogDivergence}, {-1.0, SingType::ZeroLimit}}};
    }
    throw std::logic_error("DensitySpec::make: unknown kind");
}

namespace {

// Knot-free open intervals of a spec's domain, in ascending order.
std::vector<std::pair<double, double>> subintervals(const DensitySpec& spec) {
    const double inv = 1.0 / spec.param.r;
    switch (spec.kind) {
        case DensityKind::Sigma:
        case DensityKind::TSigma:
            return {{1.0, inv}, {inv, kInf}};
        case DensityKind::Omega:
            return {{inv, 1.0}, {1.0, kInf}};
        case DensityKind::Phi:
            return {{-kInf, -inv}, {-inv, -1.0}, {-1.0, kInf}};
    }
    throw std::logic_error("subintervals: unknown kind");
}

}  // namespace

double density_derivative(const DensitySpec& spec, double t, double h) {
    if (!(h > 0.0)) throw std::domain_error("density_derivative: h must be > 0");
    bool inside = false;
    for (auto [lo, hi] : subintervals(spec))
        if (t - h > lo && t + h < hi) { inside = true; break; }
    if (!inside)
        throw std::domain_error("density_derivative: stencil crosses a knot or domain edge");
    auto f = [&](double x) { return density_eval(spec, x); };
    const double d1 = (f(t + h) - f(t - h)) / (2.0 * h);
    const double d2 = (f(t + h / 2) - f(t - h / 2)) / h;
    return (4.0 * d2 - d1) / 3.0;
}

std::vector<DensityPanel> density_panels(const DensitySpec& spec) {
    const double r = spec.param.r;
    const double lr = std::log(r);
    switch (spec.kind) {
        case DensityKind::Sigma: {
            const double inv = 1.0 / r;
            return {
                {1.0, inv,
                 [lr](double t, double dl, double dr) {
                     const double L = std::log(dl);  // log(t-1)
                     return (-lr - std::log(dr)) / (t * (L * L + kPi2));
                 },
                 {{1.0, SingType::ZeroLimit}, {inv, SingType::LogDivergence}}},
                {inv, 2.0 * inv,
                 [lr, k = inv - 1.0](double t, double dl, double) {
                     const double L = std::log(dl + k);  // log(t-1)
                     return (L - lr - std::log(dl)) / (t * (L * L + kPi2));
                 },
                 {{inv, SingType::LogDivergence}}}};
        }
        case DensityKind::TSigma: {
            const double inv = 1.0 / r;
            return {
                {1.0, inv,
                 [lr](double, double dl, double dr) {
                     const double L = std::log(dl);
                     return (-lr - std::log(dr)) / (L * L + kPi2);
                 },
                 {{1.0, SingType::ZeroLimit}, {inv, SingType::LogDivergence}}},
                {inv, 2.0 * inv,
                 [lr, k = inv - 1.0](double, double dl, double) {
                     const double L = std::log(dl + k);
                     return (L - lr - std::log(dl)) / (L * L + kPi2);
                 },
                 {{inv, SingType::LogDivergence}}}};
        }
        case DensityKind::Omega: {
            const double inv = 1.0 / r;
            return {
                {inv, 1.0,
                 [](double, double, double dr) { return -1.0 / std::log(dr); },
                 {{1.0, SingType::ZeroLimit}}},
                {1.0, 4.0,
                 [lr, k = 1.0 - inv](double, double dl, double) {
                     const double L = std::log(dl);  // log(t-1)
                     return (lr + std::log(dl + k) - L) / (L * L + kPi2);
                 },
                 {{1.0, SingType::ZeroLimit}}}};
        }
        case DensityKind::Phi:
            throw std::domain_error("density_panels: Phi integrals reduce to TSigma");
    }
    throw std::logic_error("density_panels: unknown kind");
}

DensityTailU density_tail(const DensitySpec& spec) {
    const double r = spec.param.r;
    switch (spec.kind) {
        case DensityKind::Sigma:
            // e^u sigma(1+e^u) = Lam/((1+E)(u^2+pi^2)), Lam = -log(r+(r-1)E)
            return {std::log(2.0 / r - 1.0),
                    [r](double u) {
                        const double E = std::exp(-u);
                        return -std::log(r + (r - 1.0) * E) /
                               ((1.0 + E) * (u * u + kPi2));
                    },
                    false};
        case DensityKind::TSigma:
            return {std::log(2.0 / r - 1.0),
                    [r](double u) {
                        const double E = std::exp(-u);
                        return -std::log(r + (r - 1.0) * E) / (u * u + kPi2);
                    },
                    true};
        case DensityKind::Omega:
            // omega(1+e^u) = log(r+(r-1)E)/(u^2+pi^2), positive for r > 1
            return {std::log(3.0),
                    [r](double u) {
                        const double E = std::exp(-u);
                        return std::log(r + (r - 1.0) * E) / (u * u + kPi2);
                    },
                    true};
        case DensityKind::Phi:
            throw std::domain_error("density_tail: Phi integrals reduce to TSigma");
    }
    throw std::logic_error("density_tail: unknown kind");
}

}  // namespace logratio
