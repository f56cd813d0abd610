#ifndef ACS_NUMTHEORY_HPP
#define ACS_NUMTHEORY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace acs {

/// Exact signed integer used for every scalar in the library.
using BigInt = boost::multiprecision::cpp_int;

/// Precondition on a mathematical argument was violated (negative factorial,
/// non-unit series inverse, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Inputs are well-formed individually but do not fit together
/// (mismatched ring specs, wrong parameter counts).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// The request is mathematically meaningful but outside what is implemented.
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

BigInt factorial(std::int64_t n);

/// Generalized binomial coefficient s(s-1)...(s-t+1)/t!; s may be negative.
BigInt binomial(const BigInt& s, std::int64_t t);
BigInt binomial(std::int64_t s, std::int64_t t);

/// Exponent of the largest power of two dividing n (n != 0).
unsigned two_adic_valuation(const BigInt& n);

/// a | b. divides(a, 0) is true for every a != 0.
bool divides(const BigInt& a, const BigInt& b);

bool is_power_of_two(const BigInt& n);

/// Non-negative residue of a modulo m (m > 0).
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

BigInt ipow(const BigInt& base, unsigned exponent);

std::string to_string(const BigInt& v);

} // namespace acs

#endif
