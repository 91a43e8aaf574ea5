#pragma once

// Integral representations of f_r and the objects they are built from: the
// Pick triple (alpha, beta, measure), the Stieltjes measure of f_r/z, the
// representation-based derivatives, and the Bernstein form.  All evaluators
// agree with direct evaluation up to quadrature error; complex weights are
// integrated as separate real and imaginary passes.

#include <string>
#include <utility>
#include <vector>

#include "logratio/quadrature.hpp"

namespace logratio {

// (alpha, beta, measure) of the half-plane representation.  For this family
// beta = 0 and there are no point masses; the density is the Phi spec.
struct PickData {
    double alpha;
    double beta;
    DensitySpec density;
    std::vector<std::pair<double, double>> point_masses;  // (location, mass)
};

// Measure of the Stieltjes form of f_r(z)/z for r < 1 (atom r at zero plus
// sigma_r), or of f_r itself for r > 1 (no atom, omega_r).
struct MeasureRep {
    double atom_at_zero;
    DensitySpec density;
};

// Re f_r(i) in closed form:
// (log 2 log(1+r^2) + pi arctan r) / (log^2 2 + pi^2/4).
double alpha(RatioParam r);

PickData make_pick_data(RatioParam r);
MeasureRep make_measure_rep(RatioParam r);

// f = r + int z/(z+t) sigma(t) dt (r < 1), f = 1 + int omega(t)/(z+t) dt (r > 1).
Complex eval_rep(RatioParam r, Complex z, const QuadConfig& cfg = {});

// 1 - f = int t sigma(t)/(z+t) dt; returns f.  r < 1 only.
Complex eval_one_minus_rep(RatioParam r, Complex z, const QuadConfig& cfg = {});

// f/z = r/z + int sigma(t)/(z+t) dt; returns f/z.  r < 1, z != 0.
Complex eval_f_over_z_rep(RatioParam r, Complex z, const QuadConfig& cfg = {});

// f = alpha + int_1^inf (t/(1+t^2) - 1/(t+z)) t sigma(t) dt.  r < 1;
// requires Im z > 0 or z real in (-1, inf).
Complex eval_pick_rep(RatioParam r, Complex z, const QuadConfig& cfg = {});

// Residuals of the closed-form mass identities, each with the quadrature
// error estimate of the integral behind it.
struct IdentityResidual {
    std::string name;
    double residual;
    double err_est;
};
std::vector<IdentityResidual> mass_identities(RatioParam r,
                                              const QuadConfig& cfg = {});

// n-th derivative at real x through the representation:
// (-1)^(n+1) n! int t sigma/(x+t)^(n+1) for r < 1,
// (-1)^n     n! int omega /(x+t)^(n+1) for r > 1.
double derivative_rep(RatioParam r, double x, int n, const QuadConfig& cfg = {});

// m_r(s) = int_1^inf e^{-ts} t sigma_r(t) dt, the Bernstein density of f_r.
double bernstein_m(RatioParam r, double s, const QuadConfig& cfg = {});

// f(x) = r + int_0^inf (1 - e^{-xs}) m_r(s) ds.  The outer integral splits at
// s = 1 with s = e^w beyond; its tolerance is relaxed to 1e-6 because every
// outer sample carries the inner integral's own error.
double eval_bernstein_rep(RatioParam r, double x, const QuadConfig& cfg = {});

}  // namespace logratio
