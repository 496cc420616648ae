#include "tg/euler_char.hpp"

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace tg;

namespace {

// a term list c * prod tilde V_{j} evaluated in the given window
BiSeries term(const SpecializationParams& p, const Rational& c,
              const std::vector<int>& js) {
    BiSeries r(p.z_floor(), p.z_ceiling(), p.N_max);
    r.add_term(0, 0, c);
    for (int j : js) r = bi_mul(r, tilde_V(j, p));
    return r;
}

} // namespace

TEST_CASE("open-moduli Euler characteristics") {
    CHECK(chi_open(1, 1) == Rational(-1, 12));
    CHECK(chi_open(0, 3) == Rational(1));
    CHECK(chi_open(0, 4) == Rational(-1));
    CHECK(chi_open(1, 3) == Rational(-1, 6));
    CHECK(chi_open(2, 0) == Rational(-1, 240));
    CHECK(chi_open(2, 1) == Rational(1, 120));
    CHECK_THROWS(chi_open(0, 2));
    CHECK_THROWS(chi_open(1, 0));
}

TEST_CASE("tilde V series coefficients") {
    SpecializationParams p{8, 6};
    BiSeries v1 = tilde_V(1, p);
    CHECK(bi_coeff(v1, 1, 1) == Rational(1)); // the yz term
    CHECK(bi_coeff(v1, 0, -1) == Rational(-1, 12));
    CHECK(bi_coeff(v1, 0, -3) == Rational(1, 120));
    CHECK(bi_coeff(v1, 0, -5) == Rational(-1, 252));
    CHECK(bi_coeff(v1, 0, -7) == Rational(1, 240));
    CHECK(bi_coeff(v1, 0, -9) == Rational(-1, 132));
    CHECK(bi_coeff(v1, 0, 0) == Rational(0));

    BiSeries v0 = tilde_V(0, p);
    CHECK(bi_coeff(v0, 2, 2) == Rational(-1, 2)); // -y^2 z^2 / 2
    CHECK(bi_coeff(v0, 0, -2) == chi_open(2, 0));

    BiSeries v2 = tilde_V(2, p);
    CHECK(bi_coeff(v2, 0, -2) == Rational(1, 12));
    CHECK(bi_coeff(v2, 0, -4) == Rational(-1, 40));
    CHECK(bi_coeff(v2, 0, -6) == Rational(5, 252));
    CHECK(bi_coeff(v2, 0, -8) == Rational(-7, 240));
    CHECK(bi_coeff(v2, 0, -10) == Rational(3, 44));

    BiSeries v3 = tilde_V(3, p);
    CHECK(bi_coeff(v3, 0, -1) == Rational(1));
    CHECK(bi_coeff(v3, 0, -3) == Rational(-1, 6));
    CHECK(bi_coeff(v3, 0, -5) == Rational(1, 10));
    CHECK(bi_coeff(v3, 0, -7) == Rational(-5, 42));
    CHECK(bi_coeff(v3, 0, -9) == Rational(7, 30));
    CHECK(bi_coeff(v3, 0, -11) == Rational(-15, 22));

    BiSeries v4 = tilde_V(4, p);
    CHECK(bi_coeff(v4, 0, -2) == Rational(-1));
    CHECK(bi_coeff(v4, 0, -4) == Rational(1, 2));
    CHECK(bi_coeff(v4, 0, -6) == Rational(-1, 2));
    CHECK(bi_coeff(v4, 0, -8) == Rational(5, 6));
    CHECK(bi_coeff(v4, 0, -10) == Rational(-21, 10));
    CHECK(bi_coeff(v4, 0, -12) == Rational(15, 2));

    BiSeries v5 = tilde_V(5, p);
    CHECK(bi_coeff(v5, 0, -3) == Rational(2));
    CHECK(bi_coeff(v5, 0, -5) == Rational(-2));
    CHECK(bi_coeff(v5, 0, -7) == Rational(3));
    CHECK(bi_coeff(v5, 0, -9) == Rational(-20, 3));
    CHECK(bi_coeff(v5, 0, -11) == Rational(21));
    CHECK(bi_coeff(v5, 0, -13) == Rational(-90));
}

TEST_CASE("worked example: chi from explicit tilde V term lists") {
    SpecializationParams p{2, 3};
    // chi(Mbar_{1,1}): the y z^0 coefficient of the substituted free energy
    BiSeries s11 = term(p, {1, 2}, {2});
    s11 = bi_add(s11, term(p, {1, 8}, {4}));
    s11 = bi_add(s11, term(p, {1, 2}, {1, 1}));
    s11 = bi_add(s11, term(p, {1, 2}, {1, 3}));
    s11 = bi_add(s11, term(p, {1, 4}, {2, 4}));
    s11 = bi_add(s11, term(p, {1, 4}, {2, 2}));
    s11 = bi_add(s11, term(p, {5, 24}, {3, 3}));
    s11 = bi_add(s11, term(p, {1, 12}, {4, 4}));
    CHECK(bi_coeff(s11, 1, 0) == Rational(5, 12));

    // chi(Mbar_{1,2}) = 2! [y^2 z^0]
    BiSeries s12 = term(p, {1, 2}, {1, 1, 2});
    s12 = bi_add(s12, term(p, {1, 2}, {1, 1, 3, 3}));
    s12 = bi_add(s12, term(p, {1, 4}, {1, 1, 4}));
    s12 = bi_add(s12, term(p, {1, 6}, {1, 1, 1, 3}));
    CHECK(bi_coeff(s12, 2, 0) == Rational(1, 4));
}

TEST_CASE("substitution functional on a single-term series") {
    SpecializationParams p{2, 3};
    NPointSeries s(1);
    s.add_term({1}, Rational(1));
    CHECK(specialize({s}, p) == tilde_V(1, p));
}

TEST_CASE("the three backends agree on a small window") {
    SpecializationParams p{2, 3};
    ChiTable a = chi_table(p, ChiBackend::affine);
    CHECK(a.values.at({1, 1}) == Rational(5, 12));
    CHECK(a.values.at({1, 2}) == Rational(1, 2));
    CHECK(a.values.at({2, 1}) == Rational(247, 1440));
    CHECK(a.values.at({2, 3}) == Rational(89, 32));
    ChiTable t = chi_table(p, ChiBackend::thin);
    CHECK(t.values == a.values);
    ChiTable f = chi_table(p, ChiBackend::fat);
    CHECK(f.values == a.values);
}

TEST_CASE("thin backend on a wider window") {
    SpecializationParams p{4, 4};
    CHECK(chi_table(p, ChiBackend::thin).values ==
          chi_table(p, ChiBackend::affine).values);
}

TEST_CASE("full table matches the shipped golden CSV") {
    ChiTable t = chi_table({8, 6}, ChiBackend::affine);
    std::ifstream in(std::string(TG_DATA_DIR) + "/chi_table.csv");
    REQUIRE(in.good());
    std::ostringstream gold;
    gold << in.rdbuf();
    CHECK(chi_table_csv(t) == gold.str());
}

TEST_CASE("genus-zero values are the expected integers") {
    ChiTable t = chi_table({0, 10}, ChiBackend::affine);
    const long want[] = {1, 2, 7, 34, 213, 1630, 14747, 153946};
    for (int n = 3; n <= 10; ++n)
        CHECK(t.values.at({0, n}) == Rational(want[n - 3]));
}

TEST_CASE("table entries are stable under window enlargement") {
    ChiTable small = chi_table({2, 3}, ChiBackend::affine);
    ChiTable big = chi_table({3, 4}, ChiBackend::affine);
    for (const auto& [gn, v] : small.values) CHECK(big.values.at(gn) == v);
}

TEST_CASE("renderings") {
    ChiTable t = chi_table({1, 2}, ChiBackend::affine);
    std::string csv = chi_table_csv(t);
    CHECK(csv.rfind("g,n,chi\n", 0) == 0);
    CHECK(csv.find("1,1,5/12") != std::string::npos);
    CHECK(chi_table_json(t).find("\"chi\"") != std::string::npos);
    std::string md = chi_table_markdown(t);
    CHECK(md.find('|') != std::string::npos);
    CHECK(md.find("5/12") != std::string::npos);
}

TEST_CASE("worker count honours the environment") {
    unsetenv("MODULI_EULER_THREADS");
    CHECK(worker_count() == 1);
    setenv("MODULI_EULER_THREADS", "3", 1);
    CHECK(worker_count() == 3);
    setenv("MODULI_EULER_THREADS", "0", 1);
    CHECK(worker_count() == 1); // clamped
    unsetenv("MODULI_EULER_THREADS");
}
