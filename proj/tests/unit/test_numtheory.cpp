#include <doctest.h>

#include <random>

#include "acs/numtheory.hpp"
#include "../oracles.hpp"

using acs::BigInt;

TEST_CASE("factorial")
{
    CHECK(acs::factorial(0) == 1);
    CHECK(acs::factorial(1) == 1);
    CHECK(acs::factorial(6) == 720);
    for (int n = 0; n <= 40; ++n)
        CHECK(acs::factorial(n) == oracle::factorial(n));
    CHECK(acs::factorial(30) == BigInt("265252859812191058636308480000000"));
    CHECK_THROWS_AS(acs::factorial(-1), acs::DomainError);
}

TEST_CASE("binomial")
{
    CHECK(acs::binomial(4, 2) == 6);
    for (std::int64_t s = -7; s <= 7; ++s)
        CHECK(acs::binomial(s, 0) == 1);
    CHECK(acs::binomial(-1, 3) == -1);
    CHECK(acs::binomial(3, 5) == 0);
    CHECK_THROWS_AS(acs::binomial(4, -1), acs::DomainError);

    SUBCASE("agrees with factorial quotient")
    {
        for (std::int64_t s = 0; s <= 40; ++s)
            for (std::int64_t t = 0; t <= s; ++t)
                CHECK(acs::binomial(s, t) ==
                      acs::factorial(s) / (acs::factorial(t) * acs::factorial(s - t)));
    }
    SUBCASE("agrees with Pascal triangle, any sign")
    {
        for (std::int64_t s = -30; s <= 30; ++s)
            for (std::int64_t t = 0; t <= 30; ++t)
                REQUIRE(acs::binomial(s, t) == oracle::binomial(s, t));
    }
    SUBCASE("upper negation")
    {
        for (std::int64_t s = 1; s <= 30; ++s)
            for (std::int64_t t = 0; t <= 30; ++t) {
                BigInt rhs = acs::binomial(s + t - 1, t);
                if (t % 2 == 1)
                    rhs = -rhs;
                REQUIRE(acs::binomial(-s, t) == rhs);
            }
    }
    SUBCASE("central coefficients")
    {
        for (std::int64_t q = 1; q <= 200; ++q) {
            REQUIRE(acs::divides(2, acs::binomial(4 * q, 2 * q)));
            REQUIRE(acs::divides(4, acs::binomial(4 * q + 2, 2 * q + 1)));
        }
    }
    SUBCASE("even over odd is even")
    {
        for (std::int64_t s = 0; s <= 100; s += 2)
            for (std::int64_t t = 1; t <= 100; t += 2)
                REQUIRE(acs::divides(2, acs::binomial(s, t)));
    }
}

TEST_CASE("two_adic_valuation")
{
    CHECK(acs::two_adic_valuation(12) == 2);
    CHECK(acs::two_adic_valuation(1) == 0);
    CHECK(acs::two_adic_valuation(8) == 3);
    CHECK(acs::two_adic_valuation(-40) == 3);
    CHECK(acs::two_adic_valuation(BigInt(1) << 200) == 200);
    CHECK_THROWS_AS(acs::two_adic_valuation(0), acs::DomainError);

    auto halving = [](std::int64_t v) {
        unsigned count = 0;
        while (v % 2 == 0) {
            v /= 2;
            ++count;
        }
        return count;
    };
    std::mt19937_64 rng(0x5eed01);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::int64_t a = oracle::uniform(rng, 1, 1'000'000);
        const std::int64_t b = oracle::uniform(rng, 1, 1'000'000);
        REQUIRE(acs::two_adic_valuation(a) == halving(a));
        REQUIRE(acs::two_adic_valuation(BigInt(a) * b) ==
                acs::two_adic_valuation(a) + acs::two_adic_valuation(b));
    }
}

TEST_CASE("divides")
{
    CHECK(acs::divides(24, 48));
    CHECK_FALSE(acs::divides(24, 12));
    CHECK(acs::divides(2, 0));
    CHECK(acs::divides(-3, 9));
    CHECK(acs::divides(3, -9));
    CHECK_THROWS_AS(acs::divides(0, 5), acs::DomainError);
}

TEST_CASE("is_power_of_two")
{
    CHECK(acs::is_power_of_two(1));
    CHECK_FALSE(acs::is_power_of_two(6));
    CHECK(acs::is_power_of_two(1024));
    CHECK(acs::is_power_of_two(BigInt(1) << 150));
    CHECK_FALSE(acs::is_power_of_two((BigInt(1) << 150) + 2));
    CHECK_THROWS_AS(acs::is_power_of_two(0), acs::DomainError);
    CHECK_THROWS_AS(acs::is_power_of_two(-4), acs::DomainError);
}

TEST_CASE("mod_floor and ipow")
{
    CHECK(acs::mod_floor(-1, 4) == 3);
    CHECK(acs::mod_floor(7, 4) == 3);
    CHECK(acs::mod_floor(-8, 4) == 0);
    CHECK(acs::ipow(-3, 3) == -27);
    CHECK(acs::ipow(2, 100) == BigInt(1) << 100);
    CHECK(acs::to_string(BigInt(-12345)) == "-12345");
}
