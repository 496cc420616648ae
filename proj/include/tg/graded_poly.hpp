#pragma once

#include "tg/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace tg {

// Monomial in the coupling constants: sorted (ascending) multiset of indices a,
// meaning prod t_a.  Grading: deg(t_a) = a + 1.
using Mono = std::vector<int>;

inline long mono_degree(const Mono& m) {
    long d = 0;
    for (int a : m) d += a + 1;
    return d;
}

// Truncated polynomial in t_0, t_1, ... graded by deg(t_a) = a+1.
// Invariant: every stored monomial has degree <= D and nonzero coefficient.
struct GradedPoly {
    long D = 0;
    std::map<Mono, Rational> terms;

    GradedPoly() = default;
    explicit GradedPoly(long degree) : D(degree) {}

    static GradedPoly constant(long degree, const Rational& c) {
        GradedPoly p(degree);
        if (c != 0) p.terms[{}] = c;
        return p;
    }

    Rational coeff(const Mono& m) const {
        auto it = terms.find(m);
        return it == terms.end() ? Rational(0) : it->second;
    }
    void add_term(const Mono& m, const Rational& c); // assumes m sorted
    bool is_zero() const { return terms.empty(); }
    bool operator==(const GradedPoly& o) const { return D == o.D && terms == o.terms; }
};

GradedPoly poly_add(const GradedPoly& a, const GradedPoly& b);
GradedPoly poly_sub(const GradedPoly& a, const GradedPoly& b);
GradedPoly poly_scale(const GradedPoly& a, const Rational& c);
GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b);
// log: requires constant term 1.
GradedPoly poly_log(const GradedPoly& a);
// exp: requires constant term 0.
GradedPoly poly_exp(const GradedPoly& a);
// d/dt_a
GradedPoly poly_deriv(const GradedPoly& p, int a);
// multiply by t_a (respecting truncation)
GradedPoly poly_mul_t(const GradedPoly& p, int a);
// re-truncate to a smaller degree
GradedPoly poly_truncate(const GradedPoly& p, long newD);

// Debug dump: one term per line, "coeff<TAB>monomial" with monomials like
// "t0^2 t1"; constant term prints monomial "1".  Sorted by monomial key.
std::string poly_dump(const GradedPoly& p);

} // namespace tg
