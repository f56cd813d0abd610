#ifndef ACS_RING_HPP
#define ACS_RING_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "acs/numtheory.hpp"

namespace acs {

/// Fixes the ring Z[y, x]/(y^2, x^{n+1}) of S^{2m} x CP^n: deg y = 2m,
/// deg x = 2.
struct RingSpec {
    int m = 1;
    int n = 1;

    RingSpec() = default;
    RingSpec(int m_, int n_);

    /// floor(n / 2)
    int r() const { return n / 2; }

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Dense element of Z[x]/(x^{n+1}); coefficient j multiplies x^j.
class TruncPoly {
public:
    explicit TruncPoly(int n);
    TruncPoly(int n, std::vector<BigInt> coeffs);

    static TruncPoly one(int n);
    static TruncPoly monomial(int n, int degree, BigInt coeff = 1);

    int n() const { return n_; }
    std::span<const BigInt> coeffs() const { return coeffs_; }
    const BigInt& operator[](int j) const { return coeffs_[j]; }
    BigInt& operator[](int j) { return coeffs_[j]; }

    bool is_zero() const;

    friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

private:
    int n_;
    std::vector<BigInt> coeffs_;
};

TruncPoly operator+(const TruncPoly& f, const TruncPoly& g);
TruncPoly operator-(const TruncPoly& f, const TruncPoly& g);
TruncPoly operator-(const TruncPoly& f);
TruncPoly operator*(const BigInt& s, const TruncPoly& f);

TruncPoly poly_mul(const TruncPoly& f, const TruncPoly& g);
inline TruncPoly operator*(const TruncPoly& f, const TruncPoly& g) { return poly_mul(f, g); }

/// Series inverse; the constant term must be +1 or -1.
TruncPoly poly_inverse(const TruncPoly& f);

/// f^d, negative d through poly_inverse.
TruncPoly poly_pow(const TruncPoly& f, std::int64_t d);
TruncPoly poly_pow(const TruncPoly& f, const BigInt& d);

/// even + y * odd, with y^2 = 0.
class BiGradedClass {
public:
    explicit BiGradedClass(const RingSpec& spec);
    BiGradedClass(const RingSpec& spec, TruncPoly even, TruncPoly odd);

    static BiGradedClass one(const RingSpec& spec);
    /// Embeds a class pulled back from CP^n (no y component).
    static BiGradedClass from_base(const RingSpec& spec, TruncPoly even);
    /// 1 + y * odd
    static BiGradedClass one_plus_y(const RingSpec& spec, TruncPoly odd);

    const RingSpec& spec() const { return spec_; }
    const TruncPoly& even() const { return even_; }
    const TruncPoly& odd() const { return odd_; }
    TruncPoly& even() { return even_; }
    TruncPoly& odd() { return odd_; }

    friend bool operator==(const BiGradedClass&, const BiGradedClass&) = default;

private:
    RingSpec spec_;
    TruncPoly even_;
    TruncPoly odd_;
};

BiGradedClass bi_mul(const BiGradedClass& f, const BiGradedClass& g);
inline BiGradedClass operator*(const BiGradedClass& f, const BiGradedClass& g) { return bi_mul(f, g); }
BiGradedClass operator+(const BiGradedClass& f, const BiGradedClass& g);

/// (a + yb)^{-1} = a^{-1} - y b a^{-2}; a must be a unit.
BiGradedClass bi_inverse(const BiGradedClass& f);
BiGradedClass bi_pow(const BiGradedClass& f, const BigInt& d);

/// Coefficient of y x^n, the top-degree class.
BigInt top_coefficient(const BiGradedClass& f);

/// "1 - 3x + 3x^2"
std::string format_poly(const TruncPoly& f);
/// "1 - 4*y*x - 8*y*x^3"
std::string format_class(const BiGradedClass& f);

} // namespace acs

#endif
