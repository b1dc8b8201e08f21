#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qstats/exactnum.hpp"

#include <random>

using namespace qstats;

TEST_CASE("factorial small values") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(4) == 24);
}

TEST_CASE("factorial 20 against the iterative product oracle") {
    BigInt expected = 1;
    for (int i = 2; i <= 20; ++i) {
        expected *= i;
    }
    CHECK(factorial(20) == expected);
    CHECK(decimal_string(factorial(20)) == "2432902008176640000");
}

TEST_CASE("factorial rejects negatives") {
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("binomial worked values") {
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK_THROWS_AS(binomial(-2, 1), std::invalid_argument);
}

TEST_CASE("binomial satisfies Pascal's rule up to n = 60") {
    for (long long n = 1; n <= 60; ++n) {
        for (long long k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("binomial symmetry") {
    for (long long n = 0; n <= 40; ++n) {
        for (long long k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n, n - k));
        }
    }
}

TEST_CASE("rationals normalize on construction") {
    CHECK(BigRat(15, 35) == BigRat(3, 7));
    CHECK(numerator(BigRat(15, 35)) == 3);
    CHECK(denominator(BigRat(15, 35)) == 7);
    // Sign lives in the numerator; the denominator stays positive.
    const BigRat negative = BigRat(1, 2) - BigRat(1, 1);
    CHECK(numerator(negative) == -1);
    CHECK(denominator(negative) == 2);
    CHECK(numerator(bigrat_from_fraction("1/-2")) == -1);
    CHECK(denominator(bigrat_from_fraction("1/-2")) == 2);
}

TEST_CASE("rational sums are reduced") {
    const BigRat sum = BigRat(1, 6) + BigRat(1, 3);
    CHECK(sum == BigRat(1, 2));
    CHECK(denominator(sum) == 2);
    CHECK(BigRat(2, 4) + BigRat(6, 8) == BigRat(5, 4));
}

TEST_CASE("decimal string round trip") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        BigInt v = 0;
        const int words = 1 + static_cast<int>(rng() % 6);
        for (int w = 0; w < words; ++w) {
            v <<= 64;
            v += rng();
        }
        if (rng() & 1) {
            v = -v;
        }
        CHECK(bigint_from_decimal(decimal_string(v)) == v);
    }
}

TEST_CASE("fraction string round trip") {
    CHECK(fraction_string(BigRat(18, 35)) == "18/35");
    CHECK(bigrat_from_fraction("18/35") == BigRat(18, 35));
    CHECK(bigrat_from_fraction("7") == BigRat(7));
    CHECK(bigrat_from_fraction("-3/9") == BigRat(-1, 3));
    CHECK_THROWS_AS(bigrat_from_fraction("1/0"), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const BigRat r(static_cast<long long>(rng() % 100000) - 50000,
                       static_cast<long long>(rng() % 100000) + 1);
        CHECK(bigrat_from_fraction(fraction_string(r)) == r);
    }
}

TEST_CASE("rational equality is independent of construction route") {
    // 12/35 assembled three different ways.
    const BigRat direct(12, 35);
    const BigRat scaled(24, 70);
    const BigRat sum = BigRat(1, 35) + BigRat(11, 35);
    CHECK(direct == scaled);
    CHECK(direct == sum);
}
