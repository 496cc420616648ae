#include "tg/rationalfn.hpp"

#include <stdexcept>

namespace tg {

void Poly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly poly_x() {
    Poly p;
    p.c = {Rational(0), Rational(1)};
    return p;
}

Poly p_add(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] += a.c[i];
        if (i < b.c.size()) r.c[i] += b.c[i];
    }
    r.trim();
    return r;
}

Poly p_sub(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] += a.c[i];
        if (i < b.c.size()) r.c[i] -= b.c[i];
    }
    r.trim();
    return r;
}

Poly p_mul(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

Poly p_scale(const Poly& a, const Rational& s) {
    Poly r;
    if (s == 0) return r;
    r.c = a.c;
    for (auto& v : r.c) v *= s;
    return r;
}

std::pair<Poly, Poly> p_divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("p_divrem: zero divisor");
    Poly q, r = a;
    int db = b.degree();
    Rational lead = b.c.back();
    if (r.degree() >= db) q.c.assign((size_t)(r.degree() - db + 1), Rational(0));
    while (r.degree() >= db) {
        int k = r.degree() - db;
        Rational f = r.c.back() / lead;
        q.c[(size_t)k] = f;
        for (int i = 0; i <= db; ++i) r.c[(size_t)(k + i)] -= f * b.c[(size_t)i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly p_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = p_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.c.back() != 1) {
        Rational inv = 1 / a.c.back();
        for (auto& v : a.c) v *= inv;
    }
    return a;
}

Poly p_shift(const Poly& a, const Rational& c) {
    // Horner in (u + c): result(u) = a(u + c)
    Poly r;
    for (int i = a.degree(); i >= 0; --i) {
        // r = r*(u+c) + a_i
        Poly next;
        next.c.assign(r.c.size() + 1, Rational(0));
        for (size_t k = 0; k < r.c.size(); ++k) {
            next.c[k + 1] += r.c[k];
            next.c[k] += c * r.c[k];
        }
        if (next.c.empty()) next.c.assign(1, Rational(0));
        next.c[0] += a.c[(size_t)i];
        next.trim();
        r = std::move(next);
    }
    return r;
}

Rational p_eval(const Poly& a, const Rational& x) {
    Rational r = 0;
    for (int i = a.degree(); i >= 0; --i) r = r * x + a.c[(size_t)i];
    return r;
}

RationalFn::RationalFn(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
    if (num.is_zero()) {
        den = Poly(Rational(1));
        return;
    }
    Poly g = p_gcd(num, den);
    if (g.degree() > 0) {
        num = p_divrem(num, g).first;
        den = p_divrem(den, g).first;
    }
    if (den.c.back() != 1) {
        Rational inv = 1 / den.c.back();
        for (auto& v : num.c) v *= inv;
        for (auto& v : den.c) v *= inv;
    }
}

RationalFn rf_add(const RationalFn& a, const RationalFn& b) {
    return RationalFn(p_add(p_mul(a.num, b.den), p_mul(b.num, a.den)),
                      p_mul(a.den, b.den));
}

RationalFn rf_sub(const RationalFn& a, const RationalFn& b) {
    return RationalFn(p_sub(p_mul(a.num, b.den), p_mul(b.num, a.den)),
                      p_mul(a.den, b.den));
}

RationalFn rf_mul(const RationalFn& a, const RationalFn& b) {
    return RationalFn(p_mul(a.num, b.num), p_mul(a.den, b.den));
}

RationalFn rf_div(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw std::invalid_argument("rf_div: zero divisor");
    return RationalFn(p_mul(a.num, b.den), p_mul(a.den, b.num));
}

RationalFn rf_scale(const RationalFn& a, const Rational& s) {
    return RationalFn(p_scale(a.num, s), a.den);
}

RationalFn rf_neg(const RationalFn& a) { return rf_scale(a, Rational(-1)); }

RationalFn rf_subst_inv(const RationalFn& f) {
    // f(1/w) = (sum n_i w^{N-i}) / (sum d_j w^{N-j}), N = max degree
    int N = std::max(f.num.degree(), f.den.degree());
    Poly n2, d2;
    n2.c.assign((size_t)N + 1, Rational(0));
    d2.c.assign((size_t)N + 1, Rational(0));
    for (int i = 0; i <= f.num.degree(); ++i) n2.c[(size_t)(N - i)] = f.num.c[(size_t)i];
    for (int j = 0; j <= f.den.degree(); ++j) d2.c[(size_t)(N - j)] = f.den.c[(size_t)j];
    n2.trim();
    d2.trim();
    return RationalFn(std::move(n2), std::move(d2));
}

std::vector<Rational> rf_laurent_principal(const RationalFn& f, const Rational& c) {
    return rf_laurent_principal(f.num, f.den, c);
}

std::vector<Rational> rf_laurent_principal(const Poly& num, const Poly& den,
                                           const Rational& c) {
    if (num.is_zero()) return {};
    Poly nu = p_shift(num, c), du = p_shift(den, c);
    size_t vn = 0, vd = 0;
    while (vn < nu.c.size() && nu.c[vn] == 0) ++vn;
    while (vd < du.c.size() && du.c[vd] == 0) ++vd;
    if (vd <= vn) return {};
    int m = (int)(vd - vn); // pole order
    // series division of (nu shifted down by vn) by (du shifted down by vd)
    std::vector<Rational> out((size_t)m);
    std::vector<Rational> rem((size_t)m);
    for (int i = 0; i < m; ++i) rem[(size_t)i] = nu.coeff((int)vn + i);
    Rational lead = du.c[vd];
    for (int i = 0; i < m; ++i) {
        Rational s = rem[(size_t)i] / lead;
        out[(size_t)i] = s; // a_{-m+i}
        for (int k = i + 1; k < m; ++k)
            rem[(size_t)k] -= s * du.coeff((int)vd + k - i);
    }
    return out;
}

PrincipalParts rf_partial_fractions(const RationalFn& f) {
    PrincipalParts pp;
    auto lp = rf_laurent_principal(f, Rational(1));
    auto lm = rf_laurent_principal(f, Rational(-1));
    int mp = (int)lp.size(), mm = (int)lm.size();
    pp.plus.assign((size_t)mp, Rational(0));
    pp.minus.assign((size_t)mm, Rational(0));
    for (int i = 0; i < mp; ++i) pp.plus[(size_t)(mp - 1 - i)] = lp[(size_t)i];
    for (int i = 0; i < mm; ++i) pp.minus[(size_t)(mm - 1 - i)] = lm[(size_t)i];
    RationalFn recon = rf_from_partial_fractions(pp);
    // compare by cross-multiplication (avoids a large gcd on the difference)
    if (!(p_mul(f.num, recon.den).c == p_mul(recon.num, f.den).c))
        throw std::logic_error(
            "rf_partial_fractions: poles outside w = +-1 or nonzero part at infinity");
    return pp;
}

RationalFn rf_from_partial_fractions(const PrincipalParts& pp) {
    // assemble over the common denominator (w-1)^P (w+1)^M in one pass
    Poly wm1 = p_add(poly_x(), Poly(Rational(-1)));
    Poly wp1 = p_add(poly_x(), Poly(Rational(1)));
    size_t P = pp.plus.size(), M = pp.minus.size();
    std::vector<Poly> mpow(std::max(P, M) + 1), ppow(std::max(P, M) + 1);
    mpow[0] = ppow[0] = Poly(Rational(1));
    for (size_t i = 1; i < mpow.size(); ++i) {
        mpow[i] = p_mul(mpow[i - 1], wm1);
        ppow[i] = p_mul(ppow[i - 1], wp1);
    }
    Poly num;
    for (size_t k = 1; k <= P; ++k)
        if (pp.plus[k - 1] != 0)
            num = p_add(num, p_scale(p_mul(mpow[P - k], ppow[M]), pp.plus[k - 1]));
    for (size_t k = 1; k <= M; ++k)
        if (pp.minus[k - 1] != 0)
            num = p_add(num, p_scale(p_mul(ppow[M - k], mpow[P]), pp.minus[k - 1]));
    return RationalFn(std::move(num), p_mul(mpow[P], ppow[M]));
}

} // namespace tg
