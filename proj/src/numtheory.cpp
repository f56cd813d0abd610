#include "acs/numtheory.hpp"

namespace acs {

BigInt factorial(std::int64_t n)
{
    if (n < 0)
        throw DomainError("factorial: negative argument " + std::to_string(n));
    BigInt result = 1;
    for (std::int64_t i = 2; i <= n; ++i)
        result *= i;
    return result;
}

BigInt binomial(const BigInt& s, std::int64_t t)
{
    if (t < 0)
        throw DomainError("binomial: negative lower index " + std::to_string(t));
    // Falling factorial divided incrementally; every prefix quotient is an
    // integer (it is itself a generalized binomial coefficient).
    BigInt result = 1;
    for (std::int64_t i = 0; i < t; ++i) {
        result *= (s - i);
        result /= (i + 1);
    }
    return result;
}

BigInt binomial(std::int64_t s, std::int64_t t)
{
    return binomial(BigInt(s), t);
}

unsigned two_adic_valuation(const BigInt& n)
{
    if (n == 0)
        throw DomainError("two_adic_valuation: zero has infinite valuation");
    BigInt v = abs(n);
    return static_cast<unsigned>(boost::multiprecision::lsb(v));
}

bool divides(const BigInt& a, const BigInt& b)
{
    if (a == 0)
        throw DomainError("divides: zero divisor");
    return b % a == 0;
}

bool is_power_of_two(const BigInt& n)
{
    if (n <= 0)
        throw DomainError("is_power_of_two: argument must be positive");
    return (n & (n - 1)) == 0;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

BigInt ipow(const BigInt& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

std::string to_string(const BigInt& v)
{
    return v.str();
}

} // namespace acs
