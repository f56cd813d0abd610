#include <doctest.h>

#include <random>

#include "acs/chern.hpp"
#include "../oracles.hpp"

using namespace acs;

namespace {

TruncPoly poly(int n, std::vector<BigInt> c)
{
    c.resize(static_cast<std::size_t>(n + 1), 0);
    return TruncPoly(n, std::move(c));
}

BiGradedClass y_class(const RingSpec& spec, std::vector<BigInt> odd)
{
    return BiGradedClass::one_plus_y(spec, poly(spec.n, std::move(odd)));
}

ChernSeq random_chern(std::mt19937_64& rng, int n, std::int64_t bound)
{
    std::vector<BigInt> c;
    for (int i = 0; i < n; ++i)
        c.emplace_back(oracle::uniform(rng, -bound, bound));
    return ChernSeq(n, n, c);
}

/// c(A) / c(conj A) with both factors read off the Chern character;
/// conj(g^m) = (-1)^m g^m and conj(H^k) = H^{-k}.
BiGradedClass wk_oracle(const RingSpec& spec, int k)
{
    const BiGradedClass a = oracle::g_tensor_via_character(spec, {BigInt(k)});
    const BiGradedClass a_bar = oracle::g_tensor_via_character(spec, {BigInt(-k)}, {BigInt(spec.m % 2 == 0 ? 1 : -1)});
    return bi_mul(a, bi_inverse(a_bar));
}

} // namespace

TEST_CASE("newton_power_sums")
{
    CHECK(newton_power_sums(ChernSeq(1, 1, {7}), 1).p(1) == 7);
    const PowerSums p2 = newton_power_sums(ChernSeq(2, 2, {3, 5}), 2);
    CHECK(p2.p(1) == 3);
    CHECK(p2.p(2) == 3 * 3 - 2 * 5);
    const PowerSums h = newton_power_sums(line_bundle_power(3, 1), 3);
    CHECK(h.sums == std::vector<BigInt>{1, 1, 1});
    CHECK_THROWS_AS(newton_power_sums(ChernSeq(2, 2, {1, 1}), 3), DomainError);
    CHECK_THROWS_AS(newton_power_sums(ChernSeq(2, 2, {1, 1}), 0), DomainError);

    SUBCASE("power sums of explicit roots")
    {
        std::mt19937_64 rng(0xa1);
        for (int trial = 0; trial < 300; ++trial) {
            const int n = static_cast<int>(oracle::uniform(rng, 1, 8));
            std::vector<BigInt> roots;
            const auto count = oracle::uniform(rng, 1, 6);
            for (std::int64_t i = 0; i < count; ++i)
                roots.emplace_back(oracle::uniform(rng, -5, 5));
            std::vector<BigInt> c = oracle::chern_of_roots(roots, n);
            c.erase(c.begin());
            const PowerSums p = newton_power_sums(ChernSeq(n, static_cast<int>(count), c), n);
            for (int i = 1; i <= n; ++i) {
                BigInt expected = 0;
                for (const BigInt& r : roots)
                    expected += boost::multiprecision::pow(r, static_cast<unsigned>(i));
                REQUIRE(p.p(i) == expected);
            }
        }
    }
    SUBCASE("roundtrip")
    {
        std::mt19937_64 rng(0xa2);
        for (int trial = 0; trial < 500; ++trial) {
            const int n = static_cast<int>(oracle::uniform(rng, 1, 8));
            const ChernSeq c = random_chern(rng, n, 20);
            const ChernSeq back = chern_from_power_sums(newton_power_sums(c, n), c.rank);
            REQUIRE(back.classes == c.classes);
        }
    }
    CHECK_THROWS_AS(chern_from_power_sums(PowerSums{2, {1, 0}}, 0), DomainError);
}

TEST_CASE("chern_of_g_tensor")
{
    const RingSpec s(3, 4);
    CHECK(chern_of_g_tensor(s, ChernSeq(4, 4, {0, 0, 0, 0})) == BiGradedClass::one(s));
    CHECK(chern_of_g_tensor(RingSpec(1, 2), line_bundle_power(2, 1)) == y_class(RingSpec(1, 2), {0, -1, 1}));
    CHECK_THROWS_AS(chern_of_g_tensor(s, line_bundle_power(3, 1)), UsageError);

    for (int m = 1; m <= 10; ++m) {
        const RingSpec spec(m, 2);
        const BiGradedClass g = chern_bott_generator(spec);
        CHECK(g == y_class(spec, {oracle::factorial(m - 1)}));
    }

    SUBCASE("agrees with the Chern character")
    {
        std::mt19937_64 rng(0xb1);
        for (int trial = 0; trial < 300; ++trial) {
            const RingSpec spec(static_cast<int>(oracle::uniform(rng, 1, 7)), static_cast<int>(oracle::uniform(rng, 1, 7)));
            std::vector<BigInt> ks;
            const auto count = oracle::uniform(rng, 1, 4);
            for (std::int64_t i = 0; i < count; ++i)
                ks.emplace_back(oracle::uniform(rng, -6, 6));
            std::vector<BigInt> c = oracle::chern_of_roots(ks, spec.n);
            c.erase(c.begin());
            REQUIRE(chern_of_g_tensor(spec, ChernSeq(spec.n, static_cast<int>(count), c)) ==
                    oracle::g_tensor_via_character(spec, ks));
        }
    }
    SUBCASE("divisible by (m-1)!")
    {
        std::mt19937_64 rng(0xb2);
        for (int trial = 0; trial < 1000; ++trial) {
            const RingSpec spec(static_cast<int>(oracle::uniform(rng, 1, 8)), static_cast<int>(oracle::uniform(rng, 1, 8)));
            const BiGradedClass c = chern_of_g_tensor(spec, random_chern(rng, spec.n, 10));
            for (int j = 0; j <= spec.n; ++j)
                REQUIRE(divides(factorial(spec.m - 1), c.odd()[j]));
        }
    }
}

TEST_CASE("chern_wk")
{
    CHECK(chern_wk(RingSpec(2, 3), 1) == y_class(RingSpec(2, 3), {0, -4, 0, -8}));
    CHECK(chern_wk(RingSpec(1, 2), 1) == y_class(RingSpec(1, 2), {0, 0, 2}));
    CHECK_THROWS_AS(chern_wk(RingSpec(2, 3), 0), DomainError);

    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 8; ++n)
            for (int k = 1; k <= 4; ++k) {
                const RingSpec spec(m, n);
                const BiGradedClass w = chern_wk(spec, k);
                const BiGradedClass a = chern_of_g_tensor(spec, line_bundle_power(n, k));
                REQUIRE(w == bi_mul(a, bi_inverse(conjugate_chern(a))));
                REQUIRE(w == wk_oracle(spec, k));
                for (int j = 0; j <= n; ++j) {
                    REQUIRE(w.odd()[j] == oracle::wk_coefficient(m, j, k));
                    if ((m + j) % 2 == 0)
                        REQUIRE(w.odd()[j] == 0);
                }
                REQUIRE(w.even() == TruncPoly::one(n));
            }
}

TEST_CASE("chern_g_eta_n")
{
    CHECK(chern_g_eta_n(RingSpec(1, 1), Sign::Plus) == y_class(RingSpec(1, 1), {0, 1}));
    CHECK(chern_g_eta_n(RingSpec(2, 3), Sign::Minus) == y_class(RingSpec(2, 3), {0, 0, 0, -24}));
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= 8; ++n) {
            const RingSpec spec(m, n);
            CHECK(top_coefficient(chern_g_eta_n(spec, Sign::Plus)) ==
                  oracle::factorial(m - 1) * oracle::factorial(n) * oracle::binomial(m + n - 1, n));
        }
}

TEST_CASE("natural signs come from the Chern character")
{
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 8; ++n) {
            const RingSpec spec(m, n);
            const auto [ks, ws] = oracle::eta_power(n);
            const BiGradedClass expected = oracle::g_tensor_via_character(spec, ks, ws);
            REQUIRE(chern_g_eta_n(spec, natural_eta_sign(spec)) == expected);
            REQUIRE(chern_g_eta_n(spec, flip(natural_eta_sign(spec))) != expected);
        }
    for (int n = 1; n <= 10; ++n) {
        // ch(eta^n) = x^n, so p_n = n! and every other power sum vanishes.
        std::vector<BigInt> p(static_cast<std::size_t>(n), 0);
        p.back() = oracle::factorial(n);
        const ChernSeq c = chern_from_power_sums(PowerSums{n, p}, 0);
        const BigInt cn = c.c(n);
        CHECK(cn == sign_value(natural_tangent_sign(n)) * oracle::factorial(n - 1));
    }
}

TEST_CASE("kernel case table")
{
    CHECK(kernel_case(RingSpec(1, 4)) == KernelCase::OddM);
    CHECK(kernel_case(RingSpec(3, 3)) == KernelCase::OddM);
    CHECK(kernel_case(RingSpec(2, 4)) == KernelCase::EvenMEvenN);
    CHECK(kernel_case(RingSpec(4, 3)) == KernelCase::EtaGenerator);
    CHECK(kernel_case(RingSpec(2, 5)) == KernelCase::EtaGenerator);
    CHECK(kernel_case(RingSpec(2, 3)) == KernelCase::TwoEtaGenerator);
    CHECK(kernel_case(RingSpec(4, 5)) == KernelCase::TwoEtaGenerator);
    CHECK(kernel_coordinate_count(RingSpec(2, 3)) == 2);
    CHECK(kernel_coordinate_count(RingSpec(1, 3)) == 1);
    CHECK(kernel_coordinate_count(RingSpec(2, 4)) == 2);
}

TEST_CASE("chern_kernel_element")
{
    CHECK(chern_kernel_element(RingSpec(2, 3), std::vector<BigInt>{0, 0}, Sign::Plus) ==
          BiGradedClass::one(RingSpec(2, 3)));
    CHECK_THROWS_AS(chern_kernel_element(RingSpec(2, 3), std::vector<BigInt>{1}, Sign::Plus), UsageError);
    CHECK_THROWS_AS(chern_kernel_element(RingSpec(1, 3), std::vector<BigInt>{1, 2}, Sign::Plus), UsageError);

    SUBCASE("unit coordinates reproduce w_k")
    {
        for (int m : {1, 2, 3, 4})
            for (int n = 2; n <= 8; n += 2) {
                const RingSpec spec(m, n);
                for (int k = 1; k <= spec.r(); ++k) {
                    std::vector<BigInt> b(static_cast<std::size_t>(kernel_coordinate_count(spec)), 0);
                    b[static_cast<std::size_t>(k - 1)] = 1;
                    REQUIRE(chern_kernel_element(spec, b, Sign::Plus) == chern_wk(spec, k));
                }
            }
    }
    SUBCASE("closed form, all four cases")
    {
        std::mt19937_64 rng(0xc1);
        for (int trial = 0; trial < 400; ++trial) {
            const RingSpec spec(static_cast<int>(oracle::uniform(rng, 1, 8)), static_cast<int>(oracle::uniform(rng, 1, 9)));
            const int count = kernel_coordinate_count(spec);
            std::vector<BigInt> b;
            for (int i = 0; i < count; ++i)
                b.emplace_back(oracle::uniform(rng, -20, 20));
            const Sign sign = oracle::uniform(rng, 0, 1) ? Sign::Plus : Sign::Minus;
            const BiGradedClass c = chern_kernel_element(spec, b, sign);
            REQUIRE(c.even() == TruncPoly::one(spec.n));
            for (int j = 0; j <= spec.n; ++j) {
                BigInt expected = 0;
                for (int k = 1; k <= spec.r(); ++k)
                    expected += b[static_cast<std::size_t>(k - 1)] * oracle::wk_coefficient(spec.m, j, k);
                if (j == spec.n && count > spec.r()) {
                    const int mult = kernel_case(spec) == KernelCase::TwoEtaGenerator ? 2 : 1;
                    expected += sign_value(sign) * mult * oracle::factorial(spec.m + spec.n - 1) * b.back();
                }
                REQUIRE(c.odd()[j] == expected);
            }
        }
    }
    SUBCASE("S^4 x CP^3 display")
    {
        const RingSpec spec(2, 3);
        for (int b1 = -4; b1 <= 4; ++b1)
            for (int b2 = -4; b2 <= 4; ++b2) {
                const BiGradedClass c = chern_kernel_element(spec, std::vector<BigInt>{b1, b2}, Sign::Minus);
                CHECK(c.odd()[1] == -2 * 2 * b1);
                CHECK(c.odd()[3] == -2 * 4 * b1 - 2 * 24 * b2);
            }
    }
    SUBCASE("divisible by 4(m-1)! for even m")
    {
        std::mt19937_64 rng(0xc2);
        for (int trial = 0; trial < 1000; ++trial) {
            const RingSpec spec(2 * static_cast<int>(oracle::uniform(rng, 1, 4)), static_cast<int>(oracle::uniform(rng, 2, 9)));
            std::vector<BigInt> b;
            for (int i = 0; i < kernel_coordinate_count(spec); ++i)
                b.emplace_back(oracle::uniform(rng, -20, 20));
            const BiGradedClass c = chern_kernel_element(spec, b, oracle::uniform(rng, 0, 1) ? Sign::Plus : Sign::Minus);
            for (int j = 0; j <= spec.n; ++j)
                REQUIRE(divides(4 * factorial(spec.m - 1), c.odd()[j]));
        }
    }
    SUBCASE("flipping the sign negates the eta^n contribution")
    {
        for (const RingSpec spec : {RingSpec(2, 3), RingSpec(2, 5), RingSpec(4, 3), RingSpec(6, 7)}) {
            std::vector<BigInt> b(static_cast<std::size_t>(kernel_coordinate_count(spec)), 0);
            b.back() = 3;
            const BigInt plus = top_coefficient(chern_kernel_element(spec, b, Sign::Plus));
            const BigInt minus = top_coefficient(chern_kernel_element(spec, b, Sign::Minus));
            CHECK(plus == -minus);
            CHECK(plus != 0);
        }
    }
}

TEST_CASE("h_k is a multiple of 8")
{
    for (int q = 1; q <= 20; ++q)
        for (std::int64_t k = 1; k <= 50; ++k) {
            BigInt h = 0;
            for (int i = 1; i <= 2 * q + 1; ++i)
                h += 2 * i * binomial(4 * q + 2, 2 * i) * ipow(k, static_cast<unsigned>(2 * i - 1));
            h *= -2;
            REQUIRE(divides(8, h));
        }
}

TEST_CASE("conjugate_chern")
{
    const RingSpec s(2, 3);
    CHECK(conjugate_chern(BiGradedClass::one(s)) == BiGradedClass::one(s));
    const BiGradedClass line = BiGradedClass::from_base(s, poly(3, {1, 5}));
    CHECK(conjugate_chern(line) == BiGradedClass::from_base(s, poly(3, {1, -5})));
    CHECK_THROWS_AS(conjugate_chern(BiGradedClass::from_base(s, poly(3, {2, 1}))), DomainError);

    std::mt19937_64 rng(0xd1);
    for (int trial = 0; trial < 200; ++trial) {
        const RingSpec spec(static_cast<int>(oracle::uniform(rng, 1, 5)), static_cast<int>(oracle::uniform(rng, 1, 6)));
        TruncPoly even(spec.n), odd(spec.n);
        for (int j = 0; j <= spec.n; ++j) {
            even[j] = oracle::uniform(rng, -9, 9);
            odd[j] = oracle::uniform(rng, -9, 9);
        }
        even[0] = 1;
        const BiGradedClass f(spec, even, odd);
        REQUIRE(conjugate_chern(conjugate_chern(f)) == f);
        const BiGradedClass g = chern_of_g_tensor(spec, random_chern(rng, spec.n, 5));
        REQUIRE(conjugate_chern(bi_mul(f, g)) == bi_mul(conjugate_chern(f), conjugate_chern(g)));
    }
}

TEST_CASE("chern_tangent_stable")
{
    CHECK(chern_tangent_stable(RingSpec(1, 2), std::vector<BigInt>{0}, 0, Sign::Plus) == poly(2, {1, -3, 3}));
    for (int n = 1; n <= 12; ++n) {
        const RingSpec spec(1, n);
        const std::vector<BigInt> d(static_cast<std::size_t>(spec.r()), 0);
        const TruncPoly c = chern_tangent_stable(spec, d, 0, natural_tangent_sign(n));
        CHECK(c[n] == ((n % 2 == 0) ? 1 : -1) * (n + 1));
    }
    SUBCASE("n = 1: a3 = T + 2 d_top eta")
    {
        for (int dt = -6; dt <= 6; ++dt)
            CHECK(chern_tangent_stable(RingSpec(1, 1), {}, dt, Sign::Plus) ==
                  poly_mul(poly(1, {1, -2}), poly_pow(poly(1, {1, 1}), std::int64_t{2} * dt)));
    }
    SUBCASE("n = 5 twist")
    {
        const TruncPoly expected = poly_mul(poly_pow(poly(5, {1, -1}), 6), poly_pow(poly(5, {1, 0, 0, 0, 0, 24}), 2));
        CHECK(chern_tangent_stable(RingSpec(1, 5), std::vector<BigInt>{0, 0}, 1, Sign::Plus) == expected);
    }
    SUBCASE("d_k factors")
    {
        std::mt19937_64 rng(0xe1);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = static_cast<int>(oracle::uniform(rng, 2, 8));
            const RingSpec spec(1, n);
            std::vector<BigInt> d;
            std::vector<BigInt> expected = oracle::chern_of_roots(std::vector<BigInt>(n + 1, -1), n);
            for (int k = 1; k <= spec.r(); ++k) {
                const auto dk = oracle::uniform(rng, -4, 4);
                d.emplace_back(dk);
                // H^k - conj(H^k) contributes roots +k (dk times) over roots -k.
                std::vector<BigInt> num = oracle::chern_of_roots(std::vector<BigInt>(static_cast<std::size_t>(dk < 0 ? -dk : dk), k), n);
                std::vector<BigInt> den = oracle::chern_of_roots(std::vector<BigInt>(static_cast<std::size_t>(dk < 0 ? -dk : dk), -k), n);
                if (dk < 0)
                    std::swap(num, den);
                expected = oracle::series_mul(oracle::series_mul(expected, num, n), oracle::series_inverse(den, n), n);
            }
            REQUIRE(chern_tangent_stable(spec, d, 0, Sign::Plus) == TruncPoly(n, expected));
        }
    }
    CHECK_THROWS_AS(chern_tangent_stable(RingSpec(1, 4), std::vector<BigInt>{1}, 0, Sign::Plus), UsageError);
}

TEST_CASE("euler_class")
{
    CHECK(euler_class(RingSpec(1, 1)) == BiGradedClass(RingSpec(1, 1), TruncPoly(1), poly(1, {0, 4})));
    CHECK(top_coefficient(euler_class(RingSpec(1, 2))) == -6);
    CHECK(top_coefficient(euler_class(RingSpec(2, 3))) == 8);
    for (int n = 1; n <= 10; ++n) {
        const BigInt top = top_coefficient(euler_class(RingSpec(3, n)));
        CHECK(abs(top) == 2 * (n + 1));
    }
}
