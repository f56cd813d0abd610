#include "acs/ring.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <tuple>

namespace acs {

namespace {

void require_same(int a, int b, const char* where)
{
    if (a != b)
        throw UsageError(std::string(where) + ": truncation degrees differ (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
}

void require_same(const RingSpec& a, const RingSpec& b, const char* where)
{
    if (!(a == b))
        throw UsageError(std::string(where) + ": ring specs differ");
}

std::int64_t exponent_to_int(const BigInt& d)
{
    if (d > std::numeric_limits<std::int64_t>::max() || d < std::numeric_limits<std::int64_t>::min())
        throw DomainError("exponent out of range: " + d.str());
    return d.convert_to<std::int64_t>();
}

} // namespace

RingSpec::RingSpec(int m_, int n_) : m(m_), n(n_)
{
    if (m < 1 || n < 1)
        throw DomainError("RingSpec requires m >= 1 and n >= 1 (got m=" + std::to_string(m) +
                          ", n=" + std::to_string(n) + ")");
}

TruncPoly::TruncPoly(int n) : n_(n), coeffs_(static_cast<std::size_t>(n) + 1)
{
    if (n < 0)
        throw DomainError("TruncPoly: negative truncation degree");
}

TruncPoly::TruncPoly(int n, std::vector<BigInt> coeffs) : TruncPoly(n)
{
    // Entries past x^n are dropped; missing ones are zero.
    for (std::size_t j = 0; j < coeffs.size() && j <= static_cast<std::size_t>(n); ++j)
        coeffs_[j] = std::move(coeffs[j]);
}

TruncPoly TruncPoly::one(int n)
{
    TruncPoly p(n);
    p.coeffs_[0] = 1;
    return p;
}

TruncPoly TruncPoly::monomial(int n, int degree, BigInt coeff)
{
    TruncPoly p(n);
    if (degree >= 0 && degree <= n)
        p.coeffs_[degree] = std::move(coeff);
    return p;
}

bool TruncPoly::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

TruncPoly operator+(const TruncPoly& f, const TruncPoly& g)
{
    require_same(f.n(), g.n(), "poly add");
    TruncPoly h(f.n());
    for (int j = 0; j <= f.n(); ++j)
        h[j] = f[j] + g[j];
    return h;
}

TruncPoly operator-(const TruncPoly& f, const TruncPoly& g)
{
    require_same(f.n(), g.n(), "poly sub");
    TruncPoly h(f.n());
    for (int j = 0; j <= f.n(); ++j)
        h[j] = f[j] - g[j];
    return h;
}

TruncPoly operator-(const TruncPoly& f)
{
    TruncPoly h(f.n());
    for (int j = 0; j <= f.n(); ++j)
        h[j] = -f[j];
    return h;
}

TruncPoly operator*(const BigInt& s, const TruncPoly& f)
{
    TruncPoly h(f.n());
    for (int j = 0; j <= f.n(); ++j)
        h[j] = s * f[j];
    return h;
}

TruncPoly poly_mul(const TruncPoly& f, const TruncPoly& g)
{
    require_same(f.n(), g.n(), "poly_mul");
    const int n = f.n();
    TruncPoly h(n);
    for (int i = 0; i <= n; ++i) {
        if (f[i] == 0)
            continue;
        for (int j = 0; i + j <= n; ++j)
            h[i + j] += f[i] * g[j];
    }
    return h;
}

TruncPoly poly_inverse(const TruncPoly& f)
{
    const BigInt& c0 = f[0];
    if (c0 != 1 && c0 != -1)
        throw DomainError("poly_inverse: constant term " + c0.str() + " is not a unit");
    const int n = f.n();
    TruncPoly g(n);
    g[0] = c0; // c0^{-1} == c0 for c0 = +-1
    for (int j = 1; j <= n; ++j) {
        BigInt acc = 0;
        for (int i = 1; i <= j; ++i)
            acc += f[i] * g[j - i];
        g[j] = -c0 * acc;
    }
    return g;
}

TruncPoly poly_pow(const TruncPoly& f, std::int64_t d)
{
    TruncPoly base = d < 0 ? poly_inverse(f) : f;
    std::uint64_t e = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1 : static_cast<std::uint64_t>(d);
    TruncPoly result = TruncPoly::one(f.n());
    while (e != 0) {
        if (e & 1U)
            result = poly_mul(result, base);
        e >>= 1U;
        if (e != 0)
            base = poly_mul(base, base);
    }
    return result;
}

TruncPoly poly_pow(const TruncPoly& f, const BigInt& d)
{
    return poly_pow(f, exponent_to_int(d));
}

BiGradedClass::BiGradedClass(const RingSpec& spec) : spec_(spec), even_(spec.n), odd_(spec.n) {}

BiGradedClass::BiGradedClass(const RingSpec& spec, TruncPoly even, TruncPoly odd)
    : spec_(spec), even_(std::move(even)), odd_(std::move(odd))
{
    require_same(spec_.n, even_.n(), "BiGradedClass");
    require_same(spec_.n, odd_.n(), "BiGradedClass");
}

BiGradedClass BiGradedClass::one(const RingSpec& spec)
{
    return {spec, TruncPoly::one(spec.n), TruncPoly(spec.n)};
}

BiGradedClass BiGradedClass::from_base(const RingSpec& spec, TruncPoly even)
{
    return {spec, std::move(even), TruncPoly(spec.n)};
}

BiGradedClass BiGradedClass::one_plus_y(const RingSpec& spec, TruncPoly odd)
{
    return {spec, TruncPoly::one(spec.n), std::move(odd)};
}

BiGradedClass bi_mul(const BiGradedClass& f, const BiGradedClass& g)
{
    require_same(f.spec(), g.spec(), "bi_mul");
    // (a + yb)(c + yd) = ac + y(ad + bc)
    return {f.spec(), poly_mul(f.even(), g.even()),
            poly_mul(f.even(), g.odd()) + poly_mul(f.odd(), g.even())};
}

BiGradedClass operator+(const BiGradedClass& f, const BiGradedClass& g)
{
    require_same(f.spec(), g.spec(), "bi add");
    return {f.spec(), f.even() + g.even(), f.odd() + g.odd()};
}

BiGradedClass bi_inverse(const BiGradedClass& f)
{
    TruncPoly a_inv = poly_inverse(f.even());
    TruncPoly odd = -poly_mul(poly_mul(f.odd(), a_inv), a_inv);
    return {f.spec(), std::move(a_inv), std::move(odd)};
}

BiGradedClass bi_pow(const BiGradedClass& f, const BigInt& d)
{
    // (a + yb)^d = a^d + y d a^{d-1} b
    const std::int64_t e = exponent_to_int(d);
    if (e == 0)
        return BiGradedClass::one(f.spec());
    TruncPoly even = poly_pow(f.even(), e);
    TruncPoly odd = BigInt(e) * poly_mul(poly_pow(f.even(), e - 1), f.odd());
    return {f.spec(), std::move(even), std::move(odd)};
}

BigInt top_coefficient(const BiGradedClass& f)
{
    return f.odd()[f.spec().n];
}

namespace {

struct Term {
    int chern_index;
    int y_power;
    int x_power;
    BigInt coeff;
};

std::string render(std::vector<Term> terms, bool star)
{
    std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return std::tie(a.chern_index, a.y_power) < std::tie(b.chern_index, b.y_power);
    });
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms) {
        if (t.coeff == 0)
            continue;
        BigInt mag = abs(t.coeff);
        if (first) {
            if (t.coeff < 0)
                out << "-";
        } else {
            out << (t.coeff < 0 ? " - " : " + ");
        }
        first = false;

        std::vector<std::string> factors;
        if (t.y_power == 1)
            factors.emplace_back("y");
        if (t.x_power == 1)
            factors.emplace_back("x");
        else if (t.x_power > 1)
            factors.push_back("x^" + std::to_string(t.x_power));

        if (factors.empty()) {
            out << mag;
            continue;
        }
        if (mag != 1) {
            out << mag;
            if (star)
                out << "*";
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0)
                out << "*";
            out << factors[i];
        }
    }
    if (first)
        out << "0";
    return out.str();
}

} // namespace

std::string format_poly(const TruncPoly& f)
{
    std::vector<Term> terms;
    for (int j = 0; j <= f.n(); ++j)
        terms.push_back({j, 0, j, f[j]});
    return render(std::move(terms), false);
}

std::string format_class(const BiGradedClass& f)
{
    std::vector<Term> terms;
    for (int j = 0; j <= f.spec().n; ++j) {
        terms.push_back({j, 0, j, f.even()[j]});
        terms.push_back({f.spec().m + j, 1, j, f.odd()[j]});
    }
    return render(std::move(terms), true);
}

} // namespace acs
