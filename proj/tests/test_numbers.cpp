#include <doctest.h>

#include "gramderiv/error.hpp"
#include "gramderiv/numbers.hpp"
#include "oracles.hpp"

using namespace gramderiv;

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    for (int n = 0; n < 10; ++n) {
        CHECK(binomial(n, 0) == 1);
    }
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    BigInt sum = 0;
    for (int k = 0; k <= 5; ++k) {
        sum += binomial(5, k);
    }
    CHECK(sum == 32);
    CHECK_THROWS_AS(binomial(-1, 0), DomainError);
}

TEST_CASE("binomial matches Pascal's triangle, is symmetric, satisfies Pascal's rule") {
    const auto rows = oracle::pascal(40);
    for (int n = 0; n <= 40; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == rows[n][k]);
            CHECK(binomial(n, k) == binomial(n, n - k));
            if (k >= 1 && k <= n - 1) {
                CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }
}

TEST_CASE("multifactorial") {
    CHECK(multifactorial(17, 5) == 2856);
    CHECK(multifactorial(17, 5) == 17 * 12 * 7 * 2);
    for (int r = 1; r <= 9; ++r) {
        CHECK(multifactorial(0, r) == 1);
        for (int n = 1 - r; n <= 0; ++n) {
            CHECK(multifactorial(n, r) == 1);
        }
    }
    // Frozen from the recurrence oracle: 6 * 4 * 2 and 5!.
    CHECK(oracle::multifactorial(6, 2) == 48);
    CHECK(multifactorial(6, 2) == 48);
    CHECK(multifactorial(5, 1) == 120);
    CHECK_THROWS_AS(multifactorial(-3, 2), DomainError);
    CHECK_THROWS_AS(multifactorial(5, 0), DomainError);
    CHECK_NOTHROW(multifactorial(-1, 2));
}

TEST_CASE("multifactorial agrees with the recurrence oracle") {
    for (int r = 1; r <= 7; ++r) {
        for (int n = 1 - r; n <= 40; ++n) {
            CHECK(multifactorial(n, r) == oracle::multifactorial(n, r));
        }
    }
}

TEST_CASE("n!_1 is the factorial, n!_2 the double factorial") {
    BigInt factorial = 1;
    for (int n = 0; n <= 20; ++n) {
        if (n > 0) {
            factorial *= n;
        }
        CHECK(multifactorial(n, 1) == factorial);
    }
    for (int n = 1; n <= 15; ++n) {
        BigInt even = 1;
        BigInt odd = 1;
        for (int k = 1; k <= n; ++k) {
            even *= 2 * k;
            odd *= 2 * k - 1;
        }
        CHECK(multifactorial(2 * n, 2) == even);
        CHECK(multifactorial(2 * n - 1, 2) == odd);
    }
}

TEST_CASE("rising_product") {
    CHECK(rising_product(1, 3, 1) == 6);
    CHECK(rising_product(7, 0, 3) == 1);
    CHECK(rising_product(-7, 0, 3) == 1);
    CHECK(rising_product(2, 2, 3) == 10);
    CHECK(rising_product(1, 3, 2) == 15);
    CHECK(rising_product(-2, 3, 1) == 0);
    CHECK_THROWS_AS(rising_product(1, -1, 1), DomainError);
    CHECK_THROWS_AS(rising_product(1, 1, 0), DomainError);
}

TEST_CASE("rising_product is the cleared multifactorial ratio") {
    for (int m = 1; m <= 8; ++m) {
        for (int r = 1; r <= 6; ++r) {
            for (int n = 0; n <= 8; ++n) {
                CAPTURE(m);
                CAPTURE(r);
                CAPTURE(n);
                CHECK(multifactorial(m + (n - 1) * r, r) == rising_product(m, n, r) * multifactorial(m - r, r));
            }
        }
    }
}
