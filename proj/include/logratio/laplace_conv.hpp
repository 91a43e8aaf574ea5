#pragma once

// The Laplace-transform layer for r < 1: g(s) = r + (L sigma)(s), the
// companion transform h(s) of the reflected super-unit density, the
// convolution identity g(x) + int_0^x g(s) h(x-s) ds = 1, and the pointwise
// reciprocity f_r(x) f_{1/r}(rx) = 1.

#include "logratio/densities.hpp"
#include "logratio/quadrature.hpp"

namespace logratio {

struct ConvResidual {
    double x;
    double residual;  // g(x) + (g * h)(x) - 1
    double err_est;
};

// r + int_1^inf e^{-st} sigma(t) dt; lies in (r, 1) for every s > 0.
double g_fn(RatioParam r, double s, const QuadConfig& cfg = {});

// int_1^inf e^{-st} omega_{1/r}(rt) dt.  Diverges like 1/(s log^2 s) as
// s -> 0+ because omega_{1/r} is not integrable at infinity.
double h_fn(RatioParam r, double s, const QuadConfig& cfg = {});

// Residual of the convolution identity at x.
ConvResidual convolution_residual(RatioParam r, double x,
                                  const QuadConfig& cfg = {});

// |f_r(x) f_{1/r}(rx) - 1|; pure arithmetic, any r > 0.
double reciprocity_residual(RatioParam r, double x);

}  // namespace logratio
