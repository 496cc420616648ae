#include "tg/combinatorics.hpp"
#include "tg/rational.hpp"

#include <doctest.h>

using namespace tg;

TEST_CASE("rational serialization round-trips") {
    CHECK(to_string(Rational(3, 4)) == "3/4");
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(rational_from_string("119/1440") == Rational(119, 1440));
    CHECK(rational_from_string("-6/4") == Rational(-3, 2)); // canonicalized
    CHECK(rational_from_string("42") == Rational(42));
    CHECK_THROWS(rational_from_string("not a number"));
}

TEST_CASE("factorials and double factorials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(7) == 105);
    CHECK(double_factorial(6) == 48);
    // (2n)! = (2n)!! (2n-1)!!
    for (long n = 1; n <= 10; ++n)
        CHECK(factorial(2 * n) ==
              double_factorial(2 * n) * double_factorial(2 * n - 1));
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    for (long n = 1; n <= 12; ++n)
        for (long k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(8) == Rational(-1, 30));
    CHECK(bernoulli(10) == Rational(5, 66));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK(bernoulli(14) == Rational(7, 6));
    CHECK(bernoulli(16) == Rational(-3617, 510));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(5) == 0);
}

TEST_CASE("partitions") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(8).size() == 22);
    CHECK(partitions_of(12).size() == 77);
    // first is (n), last is (1^n)
    auto ps = partitions_of(6);
    CHECK(ps.front().parts == std::vector<int>{6});
    CHECK(ps.back().parts == std::vector<int>(6, 1));
    for (const auto& p : ps) CHECK(p.weight() == 6);
    // z_lambda: sum over |lambda| = n of n!/z_lambda = p(n) permutation classes
    // check sum 1/z_lambda = 1 coefficient identity: sum_{|lambda|=n} n!/z_lambda = n!
    Integer tot = 0;
    for (const auto& p : partitions_of(7)) {
        Integer z = z_lambda(p);
        CHECK(factorial(7) % z == 0);
        tot += factorial(7) / z;
    }
    CHECK(tot == factorial(7)); // conjugacy classes of S_7 partition the group
}

TEST_CASE("z_lambda values") {
    CHECK(z_lambda(Partition{{1, 1, 1}}) == 6);
    CHECK(z_lambda(Partition{{2, 1}}) == 2);
    CHECK(z_lambda(Partition{{3}}) == 3);
    CHECK(z_lambda(Partition{{2, 2}}) == 8);
    CHECK(z_lambda(Partition{{6, 1, 1, 1, 1, 1, 1}}) == 6 * 720);
}

TEST_CASE("Frobenius notation round-trips") {
    for (int n = 0; n <= 9; ++n)
        for (const auto& lam : partitions_of(n)) {
            Frobenius fr = to_frobenius(lam);
            CHECK(from_frobenius(fr) == lam);
        }
    // hook (m|n) has arms {m}, legs {n}
    Frobenius fr = to_frobenius(Partition{{4, 1, 1}});
    REQUIRE(fr.arms.size() == 1);
    CHECK(fr.arms[0] == 3);
    CHECK(fr.legs[0] == 2);
}
