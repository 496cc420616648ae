#pragma once

#include "tg/rational.hpp"

#include <utility>
#include <vector>

namespace tg {

// Dense univariate polynomial, coefficients ascending; no trailing zeros.
struct Poly {
    std::vector<Rational> c;

    Poly() = default;
    explicit Poly(Rational v) { if (v != 0) c.push_back(std::move(v)); }

    int degree() const { return (int)c.size() - 1; } // -1 for zero
    bool is_zero() const { return c.empty(); }
    void trim();
    Rational coeff(int k) const {
        return (k < 0 || k >= (int)c.size()) ? Rational(0) : c[(size_t)k];
    }
};

Poly poly_x(); // the monomial w
Poly p_add(const Poly& a, const Poly& b);
Poly p_sub(const Poly& a, const Poly& b);
Poly p_mul(const Poly& a, const Poly& b);
Poly p_scale(const Poly& a, const Rational& s);
// quotient and remainder, b != 0
std::pair<Poly, Poly> p_divrem(const Poly& a, const Poly& b);
// monic gcd
Poly p_gcd(Poly a, Poly b);
// composition a(w + c) (Taylor shift)
Poly p_shift(const Poly& a, const Rational& c);
Rational p_eval(const Poly& a, const Rational& x);

// Reduced rational function num/den, den monic and nonzero.
struct RationalFn {
    Poly num, den;

    RationalFn() : den(Rational(1)) {}
    explicit RationalFn(Rational v) : num(std::move(v)), den(Rational(1)) {}
    RationalFn(Poly n, Poly d); // reduces

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const RationalFn& o) const {
        return num.c == o.num.c && den.c == o.den.c;
    }
};

RationalFn rf_add(const RationalFn& a, const RationalFn& b);
RationalFn rf_sub(const RationalFn& a, const RationalFn& b);
RationalFn rf_mul(const RationalFn& a, const RationalFn& b);
RationalFn rf_div(const RationalFn& a, const RationalFn& b);
RationalFn rf_scale(const RationalFn& a, const Rational& s);
RationalFn rf_neg(const RationalFn& a);
// f(1/w) as a rational function of w
RationalFn rf_subst_inv(const RationalFn& f);

// Principal part of the Laurent expansion at w = c: returns (a_{-m},...,a_{-1})
// where m is the pole order (empty when regular at c).  The Poly overload does
// not require num/den to be reduced.
std::vector<Rational> rf_laurent_principal(const RationalFn& f, const Rational& c);
std::vector<Rational> rf_laurent_principal(const Poly& num, const Poly& den,
                                           const Rational& c);

// Decomposition f = sum_k gamma_plus[k-1] (w-1)^{-k} + gamma_minus[k-1] (w+1)^{-k};
// throws if f has any other pole or fails to vanish at infinity.
struct PrincipalParts {
    std::vector<Rational> plus, minus; // index k-1 holds the (w -+ 1)^{-k} coefficient
};
PrincipalParts rf_partial_fractions(const RationalFn& f);
RationalFn rf_from_partial_fractions(const PrincipalParts& pp);

} // namespace tg
