#include "tg/biseries.hpp"
#include "tg/graded_poly.hpp"
#include "tg/multi_laurent.hpp"
#include "tg/rationalfn.hpp"

#include <doctest.h>

using namespace tg;

TEST_CASE("graded polynomial arithmetic") {
    GradedPoly p(6);
    p.add_term({0, 0}, Rational(1, 2)); // t0^2 / 2
    p.add_term({1}, Rational(1, 2));    // t1 / 2
    GradedPoly q = poly_mul(p, p);
    CHECK(q.coeff({0, 0, 0, 0}) == Rational(1, 4));
    CHECK(q.coeff({0, 0, 1}) == Rational(1, 2));
    CHECK(q.coeff({1, 1}) == Rational(1, 4));
    // truncation: t1^3 has degree 6, t0^2 t1^2 degree 6, all kept at D=6
    GradedPoly c = poly_mul(q, p);
    CHECK(c.coeff({1, 1, 1}) == Rational(1, 8));
    CHECK(c.coeff({0, 0, 1, 1}) == Rational(3, 8));
}

TEST_CASE("graded polynomial log/exp round-trip") {
    GradedPoly a(8);
    a.add_term({0}, Rational(1));
    a.add_term({1}, Rational(-1, 3));
    a.add_term({2, 3}, Rational(7, 5));
    GradedPoly e = poly_exp(a);
    CHECK(poly_log(e) == a);
    GradedPoly one = GradedPoly::constant(8, Rational(1));
    CHECK(poly_log(one).is_zero());
    // d/dt_1 exp(f) = (d f/dt_1) exp(f), exact to degree D-2
    CHECK(poly_truncate(poly_deriv(e, 1), 6) ==
          poly_truncate(poly_mul(poly_deriv(a, 1), e), 6));
}

TEST_CASE("graded polynomial derivative product rule") {
    GradedPoly a(7), b(7);
    a.add_term({0, 2}, Rational(2));
    a.add_term({1}, Rational(-1));
    b.add_term({0}, Rational(3));
    b.add_term({2}, Rational(1, 4));
    GradedPoly ab = poly_mul(a, b);
    for (int v = 0; v <= 2; ++v) {
        GradedPoly lhs = poly_deriv(ab, v);
        GradedPoly rhs = poly_add(poly_mul(poly_deriv(a, v), b),
                                  poly_mul(a, poly_deriv(b, v)));
        // derivative lowers degree by v+1; compare on the common window
        CHECK(poly_truncate(lhs, 7 - (v + 1)) == poly_truncate(rhs, 7 - (v + 1)));
    }
}

TEST_CASE("bivariate series window semantics") {
    BiSeries s(-4, 2, 3);
    s.add_term(1, 1, Rational(1));
    s.add_term(0, -2, Rational(5));
    s.add_term(0, -7, Rational(9)); // below floor: silently dropped
    s.add_term(4, 0, Rational(9));  // above y cap: silently dropped
    CHECK(s.terms.size() == 2);
    CHECK(bi_coeff(s, 0, -2) == 5);
    CHECK(bi_coeff(s, 2, 0) == 0);
    CHECK_THROWS(bi_coeff(s, 0, -5));
    CHECK_THROWS(s.add_term(0, 3, Rational(1))); // above ceiling: an error
    BiSeries t(-4, 2, 3);
    t.add_term(1, -1, Rational(2));
    BiSeries st = bi_mul(s, t);
    CHECK(bi_coeff(st, 2, 0) == 2);
    CHECK(bi_coeff(st, 1, -3) == 10);
    CHECK(bi_sub(st, st).is_zero());
}

TEST_CASE("multivariate Laurent polynomial operations") {
    MultiLaurent f(2);
    f.add_term({2, -1}, Rational(3));
    f.add_term({0, 0}, Rational(-1));
    CHECK(ml_deriv(f, 0).coeff({1, -1}) == 6);
    CHECK(ml_shift(f, 1, 2).coeff({2, 1}) == 3);
    MultiLaurent g = ml_mul(f, f);
    CHECK(g.coeff({4, -2}) == 9);
    CHECK(g.coeff({2, -1}) == -6);
    CHECK(g.coeff({0, 0}) == 1);
    // (z0^2 - z1^2) / (z0 - z1) = z0 + z1
    MultiLaurent h(2);
    h.add_term({2, 0}, Rational(1));
    h.add_term({0, 2}, Rational(-1));
    MultiLaurent q = ml_divide_diff(h, 0, 1);
    CHECK(q.coeff({1, 0}) == 1);
    CHECK(q.coeff({0, 1}) == 1);
    CHECK(q.terms.size() == 2);
    // nonzero diagonal remainder throws
    MultiLaurent bad(2);
    bad.add_term({1, 1}, Rational(1));
    CHECK_THROWS_AS(ml_divide_diff(bad, 0, 1), std::domain_error);
    // set_equal merges exponents
    CHECK(ml_set_equal(f, 0, 1).coeff({0, 1}) == 3);
}

TEST_CASE("polynomial core") {
    Poly x = poly_x();
    Poly p = p_add(p_mul(x, x), Poly(Rational(-1)));        // x^2 - 1
    Poly q = p_add(x, Poly(Rational(1)));                   // x + 1
    auto [quo, rem] = p_divrem(p, q);
    CHECK(rem.is_zero());
    CHECK(quo.c == std::vector<Rational>{Rational(-1), Rational(1)});
    CHECK(p_gcd(p, q).c == q.c); // gcd is monic x+1
    CHECK(p_eval(p, Rational(3)) == 8);
    // Taylor shift: p(x+1) = x^2 + 2x
    Poly sh = p_shift(p, Rational(1));
    CHECK(sh.coeff(0) == 0);
    CHECK(sh.coeff(1) == 2);
    CHECK(sh.coeff(2) == 1);
}

TEST_CASE("rational function reduction and substitution") {
    Poly x = poly_x();
    Poly num = p_mul(x, p_sub(p_mul(x, x), Poly(Rational(1)))); // x(x^2-1)
    Poly den = p_add(x, Poly(Rational(1)));                     // x+1
    RationalFn f(num, den);                                     // x(x-1)
    CHECK(f.den.degree() == 0);
    CHECK(p_eval(f.num, Rational(5)) == 20);
    // f(1/w) for f = 1/(w^2-1): w^2/(1-w^2)
    RationalFn g(Poly(Rational(1)), p_sub(p_mul(x, x), Poly(Rational(1))));
    RationalFn gi = rf_subst_inv(g);
    CHECK(rf_add(g, gi) == RationalFn(Rational(-1)));
    CHECK(rf_mul(g, rf_div(RationalFn(Rational(1)), g)) == RationalFn(Rational(1)));
}

TEST_CASE("Laurent principal parts and partial fractions") {
    Poly x = poly_x();
    // f = (3w+1) / (w-1)^2 : at w=1 principal part 4/(w-1)^2 + 3/(w-1)
    Poly den = p_mul(p_add(x, Poly(Rational(-1))), p_add(x, Poly(Rational(-1))));
    RationalFn f(p_add(p_scale(x, Rational(3)), Poly(Rational(1))), den);
    auto lp = rf_laurent_principal(f, Rational(1));
    REQUIRE(lp.size() == 2);
    CHECK(lp[0] == 4); // a_{-2}
    CHECK(lp[1] == 3); // a_{-1}
    CHECK(rf_laurent_principal(f, Rational(-1)).empty());
    PrincipalParts pp = rf_partial_fractions(f);
    CHECK(pp.plus == std::vector<Rational>{Rational(3), Rational(4)});
    CHECK(pp.minus.empty());
    CHECK(rf_from_partial_fractions(pp) == f);
    // a pole away from +-1 must be rejected
    RationalFn bad(Poly(Rational(1)), x);
    CHECK_THROWS_AS(rf_partial_fractions(bad), std::logic_error);
    // nonvanishing at infinity must be rejected
    CHECK_THROWS_AS(rf_partial_fractions(RationalFn(Rational(2))),
                    std::logic_error);
}
