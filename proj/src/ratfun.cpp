#include "logratio/ratfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace logratio {

namespace {

using Int = boost::multiprecision::cpp_int;
using P = std::vector<Rational>;  // ascending coefficients

void trim(P& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const P& p) { return static_cast<int>(p.size()) - 1; }  // zero: -1

Rational eval(const P& p, const Rational& x) {
    Rational v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

P mul(const P& a, const P& b) {
    if (a.empty() || b.empty()) return {};
    P out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

P add_scaled(P a, const P& b, const Rational& s) {  // a + s*b
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
    trim(a);
    return a;
}

P scale_arg(P p, const Rational& c) {  // p(c*x)
    Rational ck = 1;
    for (std::size_t k = 1; k < p.size(); ++k) {
        ck *= c;
        p[k] *= ck;
    }
    trim(p);
    return p;
}

P deriv(const P& p) {
    P out;
    for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * k);
    return out;
}

// division with remainder; b nonzero
std::pair<P, P> divmod(P a, const P& b) {
    P q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rational(0));
    while (deg(a) >= deg(b)) {
        const int shift = deg(a) - deg(b);
        const Rational f = a.back() / b.back();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        trim(a);  // leading term cancels exactly
    }
    trim(q);
    return {q, a};
}

P monic(P p) {
    const Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

P poly_gcd(P a, P b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        P r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : monic(a);
}

// lowest terms; denominator scaled to primitive integer coefficients with a
// positive leading coefficient (the numerator absorbs the same factor)
RationalFn canonical(P num, P den) {
    trim(num);
    trim(den);
    if (den.empty()) throw std::invalid_argument("rational fn: zero denominator");
    if (num.empty()) return {{}, {Rational(1)}};

    const P d = poly_gcd(num, den);
    if (deg(d) > 0) {
        num = divmod(num, d).first;
        den = divmod(den, d).first;
    }

    Int lcm_den = 1, gcd_num = 0;
    for (const auto& c : den) {
        lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(c));
    }
    for (const auto& c : den) {
        const Int n = boost::multiprecision::numerator(Rational(c * lcm_den));
        gcd_num = boost::multiprecision::gcd(gcd_num, boost::multiprecision::abs(n));
    }
    Rational m(lcm_den, gcd_num);
    if (den.back() < 0) m = -m;
    for (auto& c : num) c *= m;
    for (auto& c : den) c *= m;
    return {std::move(num), std::move(den)};
}

// divisors of a positive integer, by trial division (corpus coefficients are
// tiny; no factorization machinery warranted)
std::vector<Int> divisors(Int m) {
    std::vector<Int> out;
    for (Int i = 1; i * i <= m; ++i)
        if (m % i == 0) {
            out.push_back(i);
            out.push_back(m / i);
        }
    return out;
}

}  // namespace

RationalFn build_example_f() {
    // x/(x+1) + x/(x+3) = 2x(x+2)/((x+1)(x+3))
    return {{Rational(0), Rational(4), Rational(2)},
            {Rational(3), Rational(4), Rational(1)}};
}

RationalFn scaled_quotient(const RationalFn& f, const Rational& c) {
    if (!(c > 0 && c <= 1))
        throw std::invalid_argument("scaled_quotient: c must lie in (0, 1]");
    P num = f.num, den = f.den;
    trim(num);
    trim(den);
    if (num.empty())
        throw std::invalid_argument(
            "scaled_quotient: f is identically zero, the quotient degenerates");
    if (den.empty())
        throw std::invalid_argument("scaled_quotient: zero denominator");
    return canonical(mul(scale_arg(num, c), den), mul(scale_arg(den, c), num));
}

PFDecomp partial_fractions(const RationalFn& g) {
    const RationalFn red = canonical(g.num, g.den);
    const P& num = red.num;
    const P& den = red.den;
    if (deg(num) > deg(den))
        throw std::invalid_argument("partial_fractions: deg(num) > deg(den)");

    PFDecomp d;
    d.constant = deg(num) == deg(den) ? num.back() / den.back() : Rational(0);
    if (deg(den) == 0) return d;

    // rational root search on the primitive integer form of den
    std::vector<Int> ip;
    Int scale = 1;
    for (const auto& c : den)
        scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(c));
    for (const auto& c : den) ip.push_back(boost::multiprecision::numerator(Rational(c * scale)));

    std::size_t low = 0;
    while (ip[low] == 0) ++low;  // roots at x = 0
    std::vector<Rational> roots;
    for (std::size_t k = 0; k < low; ++k) roots.emplace_back(0);

    std::vector<Rational> candidates;
    for (const Int& p : divisors(boost::multiprecision::abs(ip[low])))
        for (const Int& q : divisors(boost::multiprecision::abs(ip.back()))) {
            candidates.emplace_back(Rational(p, q));
            candidates.emplace_back(-Rational(p, q));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    P rem(den.begin() + low, den.end());
    for (const Rational& x0 : candidates) {
        while (deg(rem) > 0 && eval(rem, x0) == 0) {
            roots.push_back(x0);
            // synthetic division by (x - x0)
            P quot(rem.size() - 1);
            Rational carry = rem.back();
            for (int k = deg(rem) - 1; k >= 0; --k) {
                quot[k] = carry;
                carry = rem[k] + carry * x0;
            }
            rem = std::move(quot);
        }
    }
    if (deg(rem) > 0)
        throw std::invalid_argument(
            "partial_fractions: denominator has irrational roots");
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
        throw std::invalid_argument("partial_fractions: repeated poles");

    const P dden = deriv(den);
    for (const Rational& x0 : roots)
        d.terms.emplace_back(-x0, eval(num, x0) / eval(dden, x0));
    std::sort(d.terms.begin(), d.terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return d;
}

ClassificationReport classification_report(const PFDecomp& d) {
    ClassificationReport rep{true, true, true, d.constant, false, 0.0};
    for (const auto& [pole, coeff] : d.terms) {
        if (coeff < 0) {
            rep.all_coeffs_nonneg = false;
            rep.negative_coeff_flag = true;
        }
        if (coeff > 0) rep.all_coeffs_nonpos = false;
        if (!(pole > 0)) rep.poles_all_positive = false;
        if (pole == 0)
            throw std::domain_error(
                "classification_report: pole at 0, no value there");
        rep.value_at_zero += coeff / pole;
    }

    const ScanGrid grid = ScanGrid::standard();
    double min_im = std::numeric_limits<double>::infinity();
    for (double x : grid.re_points)
        for (double y : grid.im_points)
            min_im = std::min(min_im, eval_decomp(d, {x, y}).imag());
    rep.numeric_pick_min_im = min_im;
    return rep;
}

Rational eval_rational(const RationalFn& f, const Rational& x) {
    const Rational dv = eval(f.den, x);
    if (dv == 0) throw std::domain_error("eval_rational: pole");
    return eval(f.num, x) / dv;
}

RationalFn reconstruct(const PFDecomp& d) {
    P num{d.constant};
    P den{Rational(1)};
    trim(num);
    for (const auto& [pole, coeff] : d.terms) {
        const P lin{pole, Rational(1)};  // x + pole
        num = add_scaled(mul(num, lin), den, coeff);
        den = mul(den, lin);
    }
    return canonical(std::move(num), std::move(den));
}

bool same_function(const RationalFn& a, const RationalFn& b) {
    P lhs = mul(a.num, b.den), rhs = mul(b.num, a.den);
    trim(lhs);
    trim(rhs);
    return lhs == rhs;
}

Complex eval_decomp(const PFDecomp& d, Complex z) {
    Complex v{d.constant.convert_to<double>(), 0.0};
    for (const auto& [pole, coeff] : d.terms)
        v += coeff.convert_to<double>() / (z + pole.convert_to<double>());
    return v;
}

}  // namespace logratio
