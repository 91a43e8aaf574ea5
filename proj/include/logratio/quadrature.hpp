#pragma once

// Singularity-aware integration: tanh-sinh panels that absorb endpoint log
// divergences, and semi-infinite density tails handled by substitution
// (u = log(t-1), then v = 1/u), never by truncation -- the tails decay like
// 1/(t log^2 t), so cutting at t = 1e8 would still lose O(1e-2).

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "logratio/densities.hpp"

namespace logratio {

struct QuadConfig {
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    int max_subdivisions = 4096;  // cap on integrand evaluations per panel
    double tail_cutoff_u = 10.0;  // v = 1/u takes over past this point
};

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
    long evals = 0;

    QuadResult& operator+=(const QuadResult& o) {
        value += o.value;
        err_est += o.err_est;
        evals += o.evals;
        return *this;
    }
};

// Non-convergence after the evaluation budget; carries the best estimate.
class QuadratureError : public std::runtime_error {
public:
    QuadResult best;
    QuadratureError(const std::string& what, QuadResult b)
        : std::runtime_error(what), best(b) {}
};

// Integrand on a finite panel; receives exact distances dl = t-a, dr = b-t so
// rearranged near-endpoint forms never cancel.
using PanelFn = std::function<double(double t, double dl, double dr)>;

QuadResult integrate_finite(const PanelFn& f, double a, double b,
                            const std::vector<Singularity>& hints,
                            const QuadConfig& cfg = {});
QuadResult integrate_finite(const std::function<double(double)>& f, double a,
                            double b, const std::vector<Singularity>& hints,
                            const QuadConfig& cfg = {});

// Integral of g over (u0, inf) for g decaying like c/u^2: finite panel up to
// max(u0, tail_cutoff_u), a v = 1/u panel down to v = 1e-8, and the analytic
// c/(u^2+pi^2) closure beyond u = 1e8 with c frozen from g there.
QuadResult integrate_tail_u(const std::function<double(double)>& g, double u0,
                            const QuadConfig& cfg = {});

// Integral of f over (T, inf) via u = log(t-1); f must decay like the density
// family, c/(t(log^2(t-1)+pi^2)) up to slowly varying factors.  Past u = 600
// (where t = 1+e^u overflows) f is replaced by its own c/(u^2+pi^2) model.
QuadResult integrate_density_tail(const std::function<double(double)>& f,
                                  double T, const QuadConfig& cfg = {});

// Full-domain integral of weight(t) * density(t): knot-split panels plus the
// substituted tail.  Phi reduces to TSigma with the weight reflected.
QuadResult integrate_density_full(const DensitySpec& spec,
                                  const std::function<double(double)>& weight,
                                  const QuadConfig& cfg = {});

}  // namespace logratio
