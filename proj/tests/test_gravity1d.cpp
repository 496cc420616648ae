#include "tg/gravity1d.hpp"

#include <doctest.h>

using namespace tg;

TEST_CASE("partition function coefficients") {
    GradedPoly Z0 = partition_function(0);
    CHECK(Z0.coeff({}) == Rational(1));
    CHECK(Z0.terms.size() == 1);

    GradedPoly Z = partition_function(12);
    CHECK(Z.coeff({}) == Rational(1));
    CHECK(Z.coeff({0, 0}) == Rational(1, 2));     // t0^2/2
    CHECK(Z.coeff({1}) == Rational(1, 2));        // t1/2
    CHECK(Z.coeff({0, 0, 1}) == Rational(3, 4));  // 3/4 t0^2 t1
    CHECK(Z.coeff({3}) == Rational(1, 8));        // t3/8
    CHECK(Z.coeff({0}) == Rational(0));           // odd weights vanish
    CHECK(Z.coeff({2}) == Rational(0));
}

TEST_CASE("partition function selection rule") {
    // each monomial prod t_{j-1}^{m_j} has sum j m_j even, i.e. total degree
    // sum (j_i + 1) even; the grading deg t_a = a + 1 is respected
    GradedPoly Z = partition_function(10);
    for (const auto& [mono, c] : Z.terms) {
        long deg = mono_degree(mono);
        CHECK(deg % 2 == 0);
        CHECK(deg <= 10);
        CHECK(c != 0);
    }
}

TEST_CASE("free energy coefficients") {
    GradedPoly F = free_energy(12);
    CHECK(F.coeff({}) == Rational(0));
    CHECK(F.coeff({0, 0}) == Rational(1, 2));
    CHECK(F.coeff({1, 1}) == Rational(1, 4));
    CHECK(F.coeff({2, 2}) == Rational(5, 24));
    CHECK(F.coeff({0, 1, 2}) == Rational(1));
    CHECK(poly_exp(F) == partition_function(12));
}

TEST_CASE("flow equations") {
    for (int n = 0; n <= 5; ++n)
        CHECK(flow_check(n, 12) == "");
}

TEST_CASE("polymer equation") {
    CHECK(polymer_check(12) == "");
}

TEST_CASE("Virasoro constraints annihilate Z") {
    const long D = 12;
    GradedPoly Z = partition_function(D);
    for (auto family : {VirasoroFamily::Original, VirasoroFamily::Reformulated})
        for (int m = -1; m <= 5; ++m) {
            VirasoroOp op{m, family};
            GradedPoly r = poly_truncate(apply_virasoro(op, Z),
                                         virasoro_exact_window(op, D));
            CHECK(r.is_zero());
        }
}

TEST_CASE("cut-and-join operator builds Z") {
    CHECK(cut_and_join_Z(12) == partition_function(12));
}
