#pragma once

// Closed-form spectral densities of the f_r family and their quadrature-facing
// piecewise descriptions.
//
//   sigma_r on (1,inf):   -log(1-rt)/(t(log^2(t-1)+pi^2)) below 1/r,
//                         +inf at 1/r, log((t-1)/(rt-1))/(t(log^2(t-1)+pi^2)) above
//   omega_r on [1/r,inf): -1/log(1-t) below 1, 0 at 1,
//                         log((rt-1)/(t-1))/(log^2(t-1)+pi^2) above
//   phi_r on R:           0 on [-1,inf), reflection of t*sigma_r below
//   tsigma_r = t*sigma_r
//
// Near-knot and far-tail evaluation uses algebraically rearranged forms; the
// raw formulas lose all digits within ~1e-12 of the knots and overflow t in
// the far tail.

#include <functional>
#include <vector>

#include "logratio/cutplane.hpp"

namespace logratio {

enum class DensityKind { Sigma, Omega, Phi, TSigma };
enum class SingType { LogDivergence, ZeroLimit, Kink };

struct Singularity {
    double location;
    SingType type;
};

struct DensitySpec {
    DensityKind kind;
    RatioParam param;
    std::vector<double> knots;  // ascending domain-partition points
    std::vector<Singularity> singularities;

    static DensitySpec make(DensityKind kind, const RatioParam& p);
};

// Point evaluation. +inf is a sentinel value at the LogDivergence knot, not an
// error; arguments outside the stated domains raise domain errors.
double sigma_density(const RatioParam& p, double t);
double omega_density(const RatioParam& p, double t);
double phi_density(const RatioParam& p, double t);
double tsigma_density(const RatioParam& p, double t);
double density_eval(const DensitySpec& spec, double t);

// Central difference with one Richardson step, O(h^4) truncation error.
// Errors if t is a knot or the stencil [t-h, t+h] crosses one.
double density_derivative(const DensitySpec& spec, double t, double h);

// One finite panel (a, b).  The integrand receives the abscissa together with
// exact distances dl = t-a, dr = b-t so near-knot forms never cancel.
struct DensityPanel {
    double a, b;
    std::function<double(double t, double dl, double dr)> eval;
    std::vector<Singularity> hints;
};

// Tail description past the last panel, in u = log(t-1) coordinates.
// weight_scaled == false: eval_u(u) = e^u * density(1+e^u), integrable alone;
//   multiply by the plain weight w(1+e^u).
// weight_scaled == true: eval_u(u) = density(1+e^u) and the bare density
//   integral diverges; the caller must fold the full factor e^u * w(1+e^u).
struct DensityTailU {
    double u0;
    std::function<double(double u)> eval_u;
    bool weight_scaled;
};

// Defined for Sigma, Omega, TSigma.  Phi integrals reduce to TSigma with the
// weight reflected (phi_r(-t) = t sigma_r(t)); quadrature does that mapping.
std::vector<DensityPanel> density_panels(const DensitySpec& spec);
DensityTailU density_tail(const DensitySpec& spec);

}  // namespace logratio
