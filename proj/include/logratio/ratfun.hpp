#pragma once

// Exact rational-function arithmetic for the counterexample study: build
// f(x) = x/(x+1) + x/(x+3), form the scaled quotient f(cx)/f(x), decompose it
// into partial fractions over exact rationals, and report the sign evidence.
// Everything here is exact; floating point enters only in the half-plane scan.

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "logratio/cutplane.hpp"
#include "logratio/pickcheck.hpp"

namespace logratio {

using Rational = boost::multiprecision::cpp_rational;

// Coefficient lists are ascending in powers of x; a trimmed list never ends
// in a zero, and an empty numerator means the zero function.
struct RationalFn {
    std::vector<Rational> num;
    std::vector<Rational> den;
};

// constant + sum coeff/(x + pole); poles are distinct.
struct PFDecomp {
    Rational constant;
    std::vector<std::pair<Rational, Rational>> terms;  // (pole, coefficient)
};

// Raw sign evidence about a decomposition.  The negative-coefficient flag and
// the numeric half-plane minimum can disagree (x/(x+1) trips the flag yet has
// Im > 0 throughout the upper half-plane); both are reported, no verdict is.
struct ClassificationReport {
    bool all_coeffs_nonneg;
    bool all_coeffs_nonpos;
    bool poles_all_positive;
    Rational value_at_zero;
    bool negative_coeff_flag;    // any decomposition coefficient < 0
    double numeric_pick_min_im;  // min Im over the standard half-plane grid
};

// 2x(x+2)/((x+1)(x+3)), the combined form of x/(x+1) + x/(x+3).
RationalFn build_example_f();

// f(cx)/f(x) reduced to lowest terms, denominator primitive with positive
// leading coefficient; c in (0, 1] (c = 1 collapses to the constant 1).
RationalFn scaled_quotient(const RationalFn& f, const Rational& c);

// Exact decomposition; requires deg(num) <= deg(den) and distinct rational
// denominator roots, otherwise throws std::invalid_argument.
PFDecomp partial_fractions(const RationalFn& g);

ClassificationReport classification_report(const PFDecomp& d);

// Exact helpers: point evaluation, recombination of a decomposition over the
// common denominator, and equality as functions (cross-multiplied).
Rational eval_rational(const RationalFn& f, const Rational& x);
RationalFn reconstruct(const PFDecomp& d);
bool same_function(const RationalFn& a, const RationalFn& b);

// Double-precision evaluation of a decomposition at a complex point.
Complex eval_decomp(const PFDecomp& d, Complex z);

}  // namespace logratio
