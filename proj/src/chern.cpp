#include "acs/chern.hpp"

namespace acs {

ChernSeq::ChernSeq(int n_, int rank_, std::vector<BigInt> c) : n(n_), rank(rank_), classes(std::move(c))
{
    if (n < 1)
        throw DomainError("ChernSeq: n must be >= 1");
    classes.resize(static_cast<std::size_t>(n));
}

TruncPoly ChernSeq::total() const
{
    TruncPoly t = TruncPoly::one(n);
    for (int i = 1; i <= n; ++i)
        t[i] = c(i);
    return t;
}

PowerSums newton_power_sums(const ChernSeq& c, int upto)
{
    if (upto < 1 || upto > c.n)
        throw DomainError("newton_power_sums: upto must lie in [1, n]");
    PowerSums p{c.n, std::vector<BigInt>(static_cast<std::size_t>(upto))};
    for (int i = 1; i <= upto; ++i) {
        BigInt acc = (i % 2 == 1 ? 1 : -1) * BigInt(i) * c.c(i);
        for (int j = 1; j < i; ++j) {
            BigInt term = c.c(j) * p.p(i - j);
            acc += (j % 2 == 1) ? term : BigInt(-term);
        }
        p.sums[static_cast<std::size_t>(i - 1)] = acc;
    }
    return p;
}

ChernSeq chern_from_power_sums(const PowerSums& p, int rank)
{
    const int upto = static_cast<int>(p.sums.size());
    std::vector<BigInt> c(static_cast<std::size_t>(p.n));
    auto ci = [&](int i) -> BigInt { return i == 0 ? BigInt(1) : c[static_cast<std::size_t>(i - 1)]; };
    for (int i = 1; i <= upto; ++i) {
        BigInt acc = 0;
        for (int j = 1; j <= i; ++j) {
            BigInt term = ci(i - j) * p.p(j);
            acc += (j % 2 == 1) ? term : BigInt(-term);
        }
        if (acc % i != 0)
            throw DomainError("chern_from_power_sums: power sums are not integral Chern data");
        c[static_cast<std::size_t>(i - 1)] = acc / i;
    }
    return ChernSeq(p.n, rank, std::move(c));
}

ChernSeq line_bundle_power(int n, const BigInt& k)
{
    return ChernSeq(n, 1, {k});
}

BiGradedClass chern_bott_generator(const RingSpec& spec)
{
    return BiGradedClass::one_plus_y(spec, TruncPoly::monomial(spec.n, 0, factorial(spec.m - 1)));
}

BiGradedClass chern_of_g_tensor(const RingSpec& spec, const ChernSeq& beta)
{
    if (beta.n != spec.n)
        throw UsageError("chern_of_g_tensor: beta lives over a different CP^n");
    const PowerSums p = newton_power_sums(beta, spec.n);
    const BigInt scale = factorial(spec.m - 1);
    TruncPoly odd(spec.n);
    for (int i = 1; i <= spec.n; ++i) {
        BigInt coeff = binomial(spec.m + i - 1, i) * p.p(i);
        odd[i] = scale * ((i % 2 == 0) ? coeff : BigInt(-coeff));
    }
    return BiGradedClass::one_plus_y(spec, std::move(odd));
}

BiGradedClass chern_wk(const RingSpec& spec, int k)
{
    if (k < 1)
        throw DomainError("chern_wk: k must be >= 1");
    const int m = spec.m;
    const BigInt scale = 2 * factorial(m - 1);
    TruncPoly odd(spec.n);
    if (m % 2 == 0) {
        for (int i = 1; 2 * i - 1 <= spec.n; ++i)
            odd[2 * i - 1] = -scale * binomial(m + 2 * i - 2, 2 * i - 1) * ipow(BigInt(k), 2 * i - 1);
    } else {
        for (int i = 1; 2 * i <= spec.n; ++i)
            odd[2 * i] = scale * binomial(m + 2 * i - 1, 2 * i) * ipow(BigInt(k), 2 * i);
    }
    return BiGradedClass::one_plus_y(spec, std::move(odd));
}

BiGradedClass chern_g_eta_n(const RingSpec& spec, Sign sign)
{
    return BiGradedClass::one_plus_y(
        spec, TruncPoly::monomial(spec.n, spec.n, sign_value(sign) * factorial(spec.m + spec.n - 1)));
}

Sign natural_eta_sign(const RingSpec& spec)
{
    return sign_of_parity(spec.n);
}

KernelCase kernel_case(const RingSpec& spec)
{
    if (spec.m % 2 == 1)
        return KernelCase::OddM;
    if (spec.n % 2 == 0)
        return KernelCase::EvenMEvenN;
    const int m4 = spec.m % 4;
    const int n4 = spec.n % 4;
    if ((m4 == 0 && n4 == 3) || (m4 == 2 && n4 == 1))
        return KernelCase::EtaGenerator;
    return KernelCase::TwoEtaGenerator;
}

int kernel_coordinate_count(const RingSpec& spec)
{
    const KernelCase kc = kernel_case(spec);
    const bool has_eta = kc == KernelCase::EtaGenerator || kc == KernelCase::TwoEtaGenerator;
    return spec.r() + (has_eta ? 1 : 0);
}

BiGradedClass chern_kernel_element(const RingSpec& spec, std::span<const BigInt> b, Sign sign)
{
    const int expected = kernel_coordinate_count(spec);
    if (static_cast<int>(b.size()) != expected)
        throw UsageError("chern_kernel_element: expected " + std::to_string(expected) +
                         " kernel coordinates, got " + std::to_string(b.size()));
    BiGradedClass total = BiGradedClass::one(spec);
    for (int k = 1; k <= spec.r(); ++k) {
        const BigInt& bk = b[static_cast<std::size_t>(k - 1)];
        if (bk != 0)
            total = bi_mul(total, bi_pow(chern_wk(spec, k), bk));
    }
    if (expected > spec.r()) {
        const int mult = kernel_case(spec) == KernelCase::TwoEtaGenerator ? 2 : 1;
        const BigInt& top = b[static_cast<std::size_t>(spec.r())];
        if (top != 0)
            total = bi_mul(total, bi_pow(chern_g_eta_n(spec, sign), mult * top));
    }
    return total;
}

BiGradedClass conjugate_chern(const BiGradedClass& c)
{
    const BigInt& c0 = c.even()[0];
    if (c0 != 1 && c0 != -1)
        throw DomainError("conjugate_chern: constant term " + c0.str() + " is not a unit");
    const RingSpec& spec = c.spec();
    BiGradedClass out = c;
    for (int j = 0; j <= spec.n; ++j) {
        if (j % 2 == 1)
            out.even()[j] = -out.even()[j];
        if ((spec.m + j) % 2 == 1)
            out.odd()[j] = -out.odd()[j];
    }
    return out;
}

int tangent_twist_u(int n)
{
    if (n % 2 == 0)
        return 0;
    return n % 4 == 3 ? 1 : 2;
}

Sign natural_tangent_sign(int n)
{
    return sign_of_parity(n - 1);
}

TruncPoly chern_tangent_stable(const RingSpec& spec, std::span<const BigInt> d, const BigInt& d_top, Sign sign)
{
    const int n = spec.n;
    if (static_cast<int>(d.size()) != spec.r())
        throw UsageError("chern_tangent_stable: expected " + std::to_string(spec.r()) + " d-coefficients, got " +
                         std::to_string(d.size()));
    TruncPoly one_minus_x = TruncPoly::one(n);
    one_minus_x[1] = -1;
    TruncPoly total = poly_pow(one_minus_x, std::int64_t{n} + 1);

    const int u = tangent_twist_u(n);
    if (u != 0 && d_top != 0) {
        TruncPoly twist = TruncPoly::one(n);
        twist[n] += sign_value(sign) * factorial(n - 1);
        total = poly_mul(total, poly_pow(twist, u * d_top));
    }

    for (int k = 1; k <= spec.r(); ++k) {
        const BigInt& dk = d[static_cast<std::size_t>(k - 1)];
        if (dk == 0)
            continue;
        TruncPoly num = TruncPoly::one(n);
        num[1] = k;
        TruncPoly den = TruncPoly::one(n);
        den[1] = -k;
        total = poly_mul(total, poly_pow(poly_mul(num, poly_inverse(den)), dk));
    }
    return total;
}

BiGradedClass euler_class(const RingSpec& spec)
{
    const int n = spec.n;
    BigInt coeff = 2 * BigInt(n + 1);
    if (n % 2 == 0)
        coeff = -coeff;
    BiGradedClass e(spec);
    e.odd()[n] = coeff;
    return e;
}

} // namespace acs
