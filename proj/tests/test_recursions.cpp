#include "tg/combinatorics.hpp"
#include "tg/fat_recursion.hpp"
#include "tg/kp_npoint.hpp"
#include "tg/multi_laurent.hpp"
#include "tg/thin_recursion.hpp"

#include <doctest.h>

#include <vector>

using namespace tg;

namespace {

long key_order(const std::vector<int>& key) {
    long o = 0;
    for (int j : key) o += j + 1;
    return o;
}

long key_weight(const std::vector<int>& key) {
    long w = 0;
    for (int j : key) w += j <= 2 ? j : j - 2;
    return w;
}

NPointSeries weight_filter(const NPointSeries& s, long cap) {
    NPointSeries r(s.n);
    for (const auto& [key, c] : s.terms)
        if (key_weight(key) <= cap) r.add_term(key, c);
    return r;
}

} // namespace

TEST_CASE("thin recursion base cells") {
    NPointSeries w11 = thin_W(1, 1);
    CHECK(w11.terms.size() == 1);
    CHECK(w11.coeff({2}) == 1);

    NPointSeries w02 = thin_W(0, 2);
    CHECK(w02.terms.size() == 1);
    CHECK(w02.coeff({1, 1}) == 1);

    NPointSeries w03 = thin_W(0, 3);
    CHECK(w03.coeff({1, 1, 2}) == 2);
}

TEST_CASE("thin cells are homogeneous") {
    for (auto [g, n] : {std::pair{2, 1}, {1, 2}, {0, 4}, {3, 3}}) {
        NPointSeries w = thin_W(g, n);
        CHECK(!w.terms.empty());
        for (const auto& [key, c] : w.terms)
            CHECK(key_order(key) == 2 * g - 2 + 3 * n);
    }
}

TEST_CASE("thin totals reproduce the n-point functions") {
    CHECK(thin_total(2, 10) == np_restrict(connected_npoint(2, 10), 10));
    CHECK(thin_total(3, 9) == np_restrict(connected_npoint(3, 9), 9));
    CHECK(thin_total_check(12, 6) == "");
}

TEST_CASE("fat disc amplitude is the Catalan series") {
    // omega_{0,1}/dz = y maps to the closed form (z - sqrt(z^2-4))/2 = 1/w
    FatCorrelator disc = fat_omega(0, 1, 13);
    REQUIRE(disc.comp.size() == 1);
    CHECK(disc.comp.at({}) == RationalFn(Poly(Rational(1)), poly_x()));

    NPointSeries w01 = fat_W(0, 1, 13);
    CHECK(w01.coeff({2}) == 1);
    CHECK(w01.coeff({4}) == 2);
    CHECK(w01.coeff({6}) == 5);
    CHECK(w01.coeff({8}) == 14);
    CHECK(w01.coeff({10}) == 42);
    for (const auto& [key, c] : w01.terms) CHECK(key[0] % 2 == 0);
}

TEST_CASE("fat cylinder and torus values") {
    NPointSeries w02 = fat_W(0, 2, 12);
    CHECK(w02.coeff({1, 1}) == 1);
    CHECK(w02.coeff({1, 3}) == 3);
    CHECK(w02.coeff({1, 5}) == 10);
    CHECK(w02.coeff({3, 3}) == 12);

    NPointSeries w11 = fat_W(1, 1, 13);
    CHECK(w11.coeff({4}) == 1);
    CHECK(w11.coeff({6}) == 10);
    CHECK(w11.coeff({8}) == 70);

    NPointSeries w03 = fat_W(0, 3, 11);
    CHECK(w03.coeff({1, 1, 2}) == 2);
    CHECK(w03.coeff({1, 1, 4}) == 12);
}

TEST_CASE("fat minimal orders") {
    CHECK(fat_min_order(0, 1) == 1);
    CHECK(fat_min_order(0, 2) == 4);
    CHECK(fat_min_order(1, 1) == 5);
    CHECK(fat_min_order(0, 3) == 7);
    CHECK(fat_min_order(2, 1) == 9);
    for (auto [g, n] : {std::pair{1, 1}, {0, 2}, {0, 3}, {1, 2}}) {
        NPointSeries w = fat_W(g, n, fat_min_order(g, n) + 4);
        long lo = key_order(w.terms.begin()->first);
        CHECK(lo >= fat_min_order(g, n));
    }
}

TEST_CASE("fat weight cap only skips out-of-budget keys") {
    for (auto [g, n] : {std::pair{0, 2}, {0, 3}, {1, 1}, {1, 2}})
        for (long cap : {2L, 3L, 5L}) {
            long L = fat_min_order(g, n) + 5;
            CHECK(fat_W(g, n, L, cap) == weight_filter(fat_W(g, n, L), cap));
        }
}

TEST_CASE("fat totals reproduce the n-point functions") {
    CHECK(fat_total_check(12, 5) == "");
}

TEST_CASE("fat cylinder matches its closed form") {
    // W_{0,2} = 1/(2 (z1-z2)^2) (-1 + (z1 z2 - 4)/sqrt((z1^2-4)(z2^2-4))),
    // with 1/sqrt(z^2-4) = sum_k C(2k,k) z^{-2k-1}.
    const long L = 12;
    MultiLaurent A(1);
    for (int k = 0; 2 * k + 1 <= L + 3; ++k)
        A.add_term({-2 * k - 1}, Rational(binomial(2 * k, k)));
    MultiLaurent AA(2);
    for (const auto& [e1, c1] : A.terms)
        for (const auto& [e2, c2] : A.terms)
            AA.add_term({e1[0], e2[0]}, c1 * c2);
    MultiLaurent one(2);
    one.add_term({0, 0}, Rational(1));
    MultiLaurent N = ml_sub(
        ml_add(ml_shift(ml_shift(AA, 0, 1), 1, 1), ml_scale(AA, Rational(-4))),
        one);
    // keep only the complete homogeneous components, then divide out the
    // double pole on the diagonal
    MultiLaurent Nw(2);
    for (const auto& [e, c] : N.terms)
        if (e[0] + e[1] >= -(L + 2)) Nw.add_term(e, c);
    MultiLaurent q = ml_divide_diff(ml_divide_diff(Nw, 0, 1), 0, 1);
    MultiLaurent half(2);
    for (const auto& [e, c] : q.terms)
        if (e[0] + e[1] >= -L) half.add_term(e, c / 2);
    // expected: the symmetrized fat cylinder on the same window
    MultiLaurent want(2);
    for (const auto& [key, c] : fat_W(0, 2, L).terms) {
        want.add_term({-key[0] - 1, -key[1] - 1}, c);
        if (key[0] != key[1]) want.add_term({-key[1] - 1, -key[0] - 1}, c);
    }
    CHECK(half.terms == want.terms);
}
