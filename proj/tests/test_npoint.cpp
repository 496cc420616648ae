#include "tg/combinatorics.hpp"
#include "tg/gravity1d.hpp"
#include "tg/kp_npoint.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

using namespace tg;

namespace {

NPointSeries load_golden(int n) {
    std::string path =
        std::string(TG_DATA_DIR) + "/npoint_g" + std::to_string(n) + ".json";
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return np_from_json(buf.str());
}

long window_of(const NPointSeries& s) {
    long L = 0;
    for (const auto& [key, c] : s.terms) {
        long o = 0;
        for (int j : key) o += j + 1;
        L = std::max(L, o);
    }
    return L;
}

} // namespace

TEST_CASE("affine coordinates of the big-cell point") {
    CHECK(affine_coord(0, 1) == 1);
    CHECK(affine_coord(0, 3) == 3);
    CHECK(affine_coord(0, 5) == 15);
    CHECK(affine_coord(0, 7) == 105);
    CHECK(affine_coord(0, 2) == 0);
    CHECK(affine_coord(1, 3) == 0);
    CHECK(affine_coord(3, 1) == 0);
}

TEST_CASE("a_hat oracle entries") {
    MultiLaurent m01 = a_hat(0, 1, 2, 10);
    CHECK(m01.coeff({-1, -2}) == 1); // A part
    CHECK(m01.coeff({-1, -4}) == 3);
    CHECK(m01.coeff({-1, -6}) == 15);
    CHECK(m01.coeff({-1, 0}) == 1); // 1/(z0 - z1), z1 large
    CHECK(m01.coeff({-2, 1}) == 1);
    MultiLaurent m10 = a_hat(1, 0, 2, 10);
    CHECK(m10.coeff({-2, -1}) == 1);
    CHECK(m10.coeff({-1, 0}) == -1); // opposite region, opposite sign
    CHECK(m10.coeff({-2, 1}) == -1);
    MultiLaurent diag = a_hat(0, 0, 1, 12);
    CHECK(diag.coeff({-3}) == 1);
    CHECK(diag.coeff({-5}) == 3);
    CHECK(diag.coeff({-7}) == 15);
    CHECK(diag.coeff({-1}) == 0);
}

TEST_CASE("one-point function is the double-factorial series") {
    NPointSeries g1 = connected_npoint(1, 16);
    for (int k = 0; 2 * k + 3 <= 16; ++k)
        CHECK(g1.coeff({2 * k + 2}) == Rational(double_factorial(2 * k + 1)));
    for (const auto& [key, c] : g1.terms) CHECK(key[0] % 2 == 0);
}

TEST_CASE("two-point function closed forms") {
    NPointSeries g2 = connected_npoint(2, 14);
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) {
            if ((2 * k + 1) + (2 * l + 1) + 2 > 14) continue;
            CHECK(g2.coeff({2 * k + 1, 2 * l + 1}) ==
                  Rational(double_factorial(2 * (k + l) + 1)));
            if ((2 * k + 2) + (2 * l + 2) + 2 > 14) continue;
            CHECK(g2.coeff({2 * k + 2, 2 * l + 2}) ==
                  Rational(double_factorial(2 * (k + l) + 3) -
                           double_factorial(2 * k + 1) *
                               double_factorial(2 * l + 1)));
        }
    // mixed parity violates the selection rule
    CHECK(g2.coeff({1, 2}) == 0);
}

TEST_CASE("cycle-representative choice is immaterial") {
    for (int n : {3, 4}) {
        long L = n == 3 ? 11 : 10;
        CHECK(connected_npoint_allcycles(n, (int)L) ==
              connected_npoint(n, (int)L));
    }
}

TEST_CASE("widened exponent window only adds cancelling keys") {
    CHECK(connected_npoint(2, 10, 0) == connected_npoint(2, 10));
    CHECK(connected_npoint(3, 9, -1) == connected_npoint(3, 9));
    CHECK(connected_npoint(3, 9, 0) == connected_npoint(3, 9));
}

TEST_CASE("n-point functions match the published tables") {
    for (int n = 1; n <= 6; ++n) {
        NPointSeries gold = load_golden(n);
        REQUIRE(gold.n == n);
        long L = window_of(gold);
        NPointSeries mine = np_restrict(connected_npoint(n, (int)L), L);
        CHECK(mine == gold);
    }
}

TEST_CASE("free energy assembles from the n-point functions") {
    CHECK(assemble_F(12) == free_energy(12));
}

TEST_CASE("key orbit sizes") {
    CHECK(key_orbit_size({1, 1}) == 1);
    CHECK(key_orbit_size({1, 2}) == 2);
    CHECK(key_orbit_size({1, 1, 2}) == 3);
    CHECK(key_orbit_size({1, 2, 3}) == 6);
    CHECK(key_orbit_size({2, 2, 2, 2}) == 1);
}

TEST_CASE("Kac-Schwarz structure") {
    LaurentVector f0 = normalized_basis(0, -8, 2);
    CHECK(f0.coeff(0) == 1);
    CHECK(f0.coeff(-2) == 1);
    CHECK(f0.coeff(-4) == 3);
    CHECK(f0.coeff(-6) == 15);
    CHECK(f0.coeff(1) == 0);
    LaurentVector f2 = normalized_basis(2, -8, 2);
    CHECK(f2.coeff(2) == 1);
    CHECK(f2.coeff(-1) == 0);
    // Q f_0 = f_1 on the safe window
    LaurentVector q0 = ks_apply(ks_Q(), f0);
    LaurentVector f1 = normalized_basis(1, q0.lo, q0.hi);
    CHECK(q0.c == f1.c);
    CHECK(ks_verify(8, 30) == "");
}
