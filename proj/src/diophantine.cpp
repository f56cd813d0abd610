#include "acs/diophantine.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace acs {

namespace {

void require_supported(const RingSpec& spec)
{
    if (spec.m != 1 && spec.m != 2)
        throw UnsupportedError("enumeration is restricted to m in {1, 2}: the sphere summand of K(S^" +
                               std::to_string(2 * spec.m) + ") is only parametrised for m = 1 and even m (got m = " +
                               std::to_string(spec.m) + ")");
}

/// Which parameters actually enter the residual.
struct Layout {
    RingSpec spec;
    int nb = 0;
    bool has_sphere = false;
    bool d_top_active = false;
    bool eta_sign_active = false;

    explicit Layout(const RingSpec& s) : spec(s)
    {
        nb = kernel_coordinate_count(s);
        has_sphere = s.m == 1;
        d_top_active = d_top_relevant(s);
        eta_sign_active = sign_eta_relevant(s);
    }

    int linear_count() const { return nb + (has_sphere ? 1 : 0); }

    void set_linear(KDecomposition& dec, int i, const BigInt& v) const
    {
        if (i < nb)
            dec.b[static_cast<std::size_t>(i)] = v;
        else
            dec.d_sphere = v;
    }

    std::vector<std::string> linear_names() const
    {
        std::vector<std::string> names;
        for (int i = 1; i <= nb; ++i)
            names.push_back("b" + std::to_string(i));
        if (has_sphere)
            names.emplace_back("d_sphere");
        return names;
    }
};

/// Odometer over a symmetric integer box; returns false once exhausted.
bool advance(std::vector<std::int64_t>& v, const std::vector<std::int64_t>& half)
{
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] < half[i]) {
            ++v[i];
            return true;
        }
        v[i] = -half[i];
    }
    return false;
}

std::vector<std::int64_t> box_start(const std::vector<std::int64_t>& half)
{
    std::vector<std::int64_t> v(half.size());
    for (std::size_t i = 0; i < half.size(); ++i)
        v[i] = -half[i];
    return v;
}

bool key_less(const KDecomposition& a, const KDecomposition& b)
{
    const auto ka = parameter_key(a);
    const auto kb = parameter_key(b);
    return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
}

void canonicalize(KDecomposition& dec, const Layout& layout, bool quantified)
{
    const RingSpec& spec = layout.spec;
    const Sign eta_nat = natural_eta_sign(spec);
    const Sign a3_nat = natural_tangent_sign(spec.n);
    if (!layout.eta_sign_active) {
        dec.sign_eta = eta_nat;
    } else if (quantified && dec.sign_eta != eta_nat) {
        // (b, -) and (-b, +) are the same element of K.
        auto& top = dec.b[static_cast<std::size_t>(spec.r())];
        top = -top;
        dec.sign_eta = eta_nat;
    }
    if (!layout.d_top_active) {
        dec.sign_a3 = a3_nat;
    } else if (quantified && dec.sign_a3 != a3_nat) {
        dec.d_top = -dec.d_top;
        dec.sign_a3 = a3_nat;
    }
}

struct Chunk {
    std::vector<KDecomposition> found;
    std::uint64_t evaluations = 0;
};

} // namespace

bool sign_eta_relevant(const RingSpec& spec)
{
    return kernel_coordinate_count(spec) > spec.r();
}

bool d_top_relevant(const RingSpec& spec)
{
    // For even m the y-part of c(a1) has no constant term and a2 = 0, so the
    // x^n coefficient of c(a3), the only place d_top lands, never reaches the
    // top class.
    return tangent_twist_u(spec.n) != 0 && spec.m % 2 == 1;
}

SearchBox SearchBox::uniform(std::int64_t half_width)
{
    if (half_width < 0)
        throw DomainError("box half-width must be >= 0");
    SearchBox box;
    box.b = box.d_sphere = box.d = box.d_top = half_width;
    return box;
}

KDecomposition AffineFamily::at(std::int64_t k) const
{
    KDecomposition dec = base;
    const BigInt kk = k;
    for (std::size_t i = 0; i < dec.b.size() && i < step.b.size(); ++i)
        dec.b[i] += kk * step.b[i];
    for (std::size_t i = 0; i < dec.d.size() && i < step.d.size(); ++i)
        dec.d[i] += kk * step.d[i];
    dec.d_sphere += kk * step.d_sphere;
    dec.d_top += kk * step.d_top;
    return dec;
}

std::vector<BigInt> parameter_key(const KDecomposition& dec)
{
    std::vector<BigInt> key(dec.b.begin(), dec.b.end());
    key.push_back(dec.d_sphere);
    key.insert(key.end(), dec.d.begin(), dec.d.end());
    key.push_back(dec.d_top);
    key.emplace_back(sign_value(dec.sign_eta));
    key.emplace_back(sign_value(dec.sign_a3));
    return key;
}

AffineEquation residual_affine_form(const KDecomposition& at)
{
    const Layout layout(at.spec);
    require_supported(at.spec);
    KDecomposition base = at;
    for (int i = 0; i < layout.linear_count(); ++i)
        layout.set_linear(base, i, 0);
    AffineEquation eq;
    eq.variables = layout.linear_names();
    eq.constant = acs_equation_residual(base);
    for (int i = 0; i < layout.linear_count(); ++i) {
        KDecomposition unit = base;
        layout.set_linear(unit, i, 1);
        eq.coefficients.push_back(acs_equation_residual(unit) - eq.constant);
    }
    return eq;
}

std::string AffineEquation::display() const
{
    const BigInt scale = display_scale == 0 ? BigInt(1) : display_scale;
    bool exact = constant % scale == 0;
    for (const BigInt& c : coefficients)
        exact = exact && c % scale == 0;
    const BigInt s = exact ? scale : BigInt(1);

    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        const BigInt c = coefficients[i] / s;
        if (c == 0)
            continue;
        const BigInt mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1)
            out << mag << "*";
        out << variables[i];
    }
    if (first)
        out << "0";
    out << " = " << BigInt(-constant / s);
    return out.str();
}

AffineEquation example_equation_coefficients(const RingSpec& spec, const KDecomposition& at)
{
    if (!(at.spec == spec))
        throw UsageError("example_equation_coefficients: parameters belong to a different space");
    BigInt scale;
    if (spec == RingSpec(1, 1))
        scale = 1;
    else if (spec == RingSpec(1, 2))
        scale = 2;
    else if (spec == RingSpec(2, 3))
        scale = -8;
    else
        throw UnsupportedError("example equations are tabulated only for (m,n) in {(1,1), (1,2), (2,3)}");
    AffineEquation eq = residual_affine_form(at);
    eq.display_scale = scale;
    return eq;
}

std::vector<KDecomposition> all_solutions_s2_cp1(Sign sign_a3)
{
    const RingSpec spec(1, 1);
    auto residual = [&](const BigInt& ds, const BigInt& dt) {
        KDecomposition dec = KDecomposition::zero(spec);
        dec.sign_a3 = sign_a3;
        dec.d_sphere = ds;
        dec.d_top = dt;
        return acs_equation_residual(dec);
    };
    const BigInt r00 = residual(0, 0);
    const BigInt r10 = residual(1, 0);
    const BigInt r01 = residual(0, 1);
    const BigInt r11 = residual(1, 1);
    const BigInt A = r11 - r10 - r01 + r00;
    const BigInt B = r10 - r00;
    const BigInt C = r01 - r00;
    const BigInt D = r00;
    const std::pair<int, int> probes[] = {{2, 3}, {-3, 5}, {7, -2}, {-4, -9}};
    for (const auto& [ds, dt] : probes) {
        if (residual(ds, dt) != A * ds * dt + B * ds + C * dt + D)
            throw std::logic_error("S^2 x CP^1 residual is not bilinear");
    }
    if (C != 0 || A == 0 || D == 0)
        throw std::logic_error("S^2 x CP^1 residual does not factor as d_sphere * (A d_top + B) = -D");

    // d_sphere * (A d_top + B) = -D, so d_sphere runs over the divisors of D.
    std::vector<KDecomposition> out;
    const BigInt absD = abs(D);
    for (BigInt e = 1; e <= absD; ++e) {
        if (absD % e != 0)
            continue;
        for (const BigInt& ds : {e, BigInt(-e)}) {
            const BigInt t = -D / ds - B;
            if (t % A != 0)
                continue;
            KDecomposition dec = KDecomposition::zero(spec);
            dec.sign_a3 = sign_a3;
            dec.d_sphere = ds;
            dec.d_top = t / A;
            out.push_back(dec);
        }
    }
    std::sort(out.begin(), out.end(), key_less);
    return out;
}

bool verify_family(const RingSpec& spec, const AffineFamily& family, std::int64_t k_lo, std::int64_t k_hi)
{
    if (!(family.base.spec == spec))
        throw UsageError("verify_family: family belongs to a different space");
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        if (acs_equation_residual(family.at(k)) != 0)
            return false;
    }
    return true;
}

namespace {

std::vector<FamilyCertificate> known_families(const RingSpec& spec, const SearchBox& box)
{
    std::vector<FamilyCertificate> out;
    auto floor_div = [](std::int64_t a, std::int64_t b) {
        std::int64_t q = a / b;
        return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
    };
    // Largest k-interval keeping every base + k*step within [-half, half].
    auto clamp_range = [&](const std::vector<std::pair<std::int64_t, std::int64_t>>& coords, std::int64_t half,
                           std::int64_t& lo, std::int64_t& hi) {
        lo = std::numeric_limits<std::int64_t>::min() / 4;
        hi = std::numeric_limits<std::int64_t>::max() / 4;
        for (const auto& [base, step] : coords) {
            if (step == 0)
                continue;
            std::int64_t a = -half - base;
            std::int64_t b = half - base;
            if (step < 0)
                std::swap(a, b);
            lo = std::max(lo, -floor_div(-a, step));
            hi = std::min(hi, floor_div(b, step));
        }
    };

    if (spec == RingSpec(2, 3)) {
        FamilyCertificate cert;
        cert.description = "b1 = -7 + 6k, b2 = 1 - k, d1 = 1 (sign_eta = -)";
        KDecomposition base = KDecomposition::zero(spec);
        base.sign_eta = Sign::Minus;
        base.b = {-7, 1};
        base.d = {1};
        KDecomposition step = KDecomposition::zero(spec);
        step.b = {6, -1};
        step.d = {0};
        cert.family = {base, step};
        clamp_range({{-7, 6}, {1, -1}}, box.b, cert.k_lo, cert.k_hi);
        out.push_back(cert);
    } else if (spec == RingSpec(1, 2)) {
        FamilyCertificate cert;
        cert.description = "b1 = -3 - 3k, d_sphere = k, d1 = 0";
        KDecomposition base = KDecomposition::zero(spec);
        base.b = {-3};
        KDecomposition step = KDecomposition::zero(spec);
        step.b = {-3};
        step.d_sphere = 1;
        cert.family = {base, step};
        std::int64_t lo1, hi1, lo2, hi2;
        clamp_range({{-3, -3}}, box.b, lo1, hi1);
        clamp_range({{0, 1}}, box.d_sphere, lo2, hi2);
        cert.k_lo = std::max(lo1, lo2);
        cert.k_hi = std::min(hi1, hi2);
        out.push_back(cert);
    }
    for (FamilyCertificate& cert : out)
        cert.verified = cert.k_lo <= cert.k_hi && verify_family(spec, cert.family, cert.k_lo, cert.k_hi);
    return out;
}

} // namespace

SolutionSet enumerate(const RingSpec& spec, const SearchBox& box)
{
    require_supported(spec);
    if (box.b < 0 || box.d_sphere < 0 || box.d < 0 || box.d_top < 0)
        throw DomainError("box half-widths must be >= 0");
    const Layout layout(spec);
    const bool quantified = !box.fixed_signs.has_value();

    std::vector<std::pair<Sign, Sign>> sign_combos;
    {
        std::vector<Sign> etas{natural_eta_sign(spec)};
        std::vector<Sign> a3s{natural_tangent_sign(spec.n)};
        if (quantified) {
            if (layout.eta_sign_active)
                etas.push_back(flip(etas.front()));
            if (layout.d_top_active)
                a3s.push_back(flip(a3s.front()));
        } else {
            etas = {box.fixed_signs->first};
            a3s = {box.fixed_signs->second};
        }
        for (Sign e : etas)
            for (Sign a : a3s)
                sign_combos.emplace_back(e, a);
    }

    // Outer grid: the parameters the residual is not affine in.
    std::vector<std::int64_t> outer_half(static_cast<std::size_t>(spec.r()), box.d);
    if (layout.d_top_active)
        outer_half.push_back(box.d_top);
    std::uint64_t outer_total = 1;
    for (std::int64_t h : outer_half)
        outer_total *= static_cast<std::uint64_t>(2 * h + 1);

    std::vector<std::int64_t> linear_half(static_cast<std::size_t>(layout.nb), box.b);
    if (layout.has_sphere)
        linear_half.push_back(box.d_sphere);
    const int nlin = layout.linear_count();

    auto decode = [&](std::uint64_t idx) {
        std::vector<std::int64_t> v(outer_half.size());
        for (std::size_t i = outer_half.size(); i-- > 0;) {
            const auto width = static_cast<std::uint64_t>(2 * outer_half[i] + 1);
            v[i] = static_cast<std::int64_t>(idx % width) - outer_half[i];
            idx /= width;
        }
        return v;
    };

    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        Chunk chunk;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            const std::vector<std::int64_t> outer = decode(idx);
            for (const auto& [eta, a3] : sign_combos) {
                KDecomposition at = KDecomposition::zero(spec);
                at.sign_eta = eta;
                at.sign_a3 = a3;
                for (int k = 0; k < spec.r(); ++k)
                    at.d[static_cast<std::size_t>(k)] = outer[static_cast<std::size_t>(k)];
                if (layout.d_top_active)
                    at.d_top = outer.back();

                const AffineEquation eq = residual_affine_form(at);
                chunk.evaluations += static_cast<std::uint64_t>(nlin) + 1;

                int pivot = -1;
                for (int i = nlin; i-- > 0;) {
                    if (eq.coefficients[static_cast<std::size_t>(i)] != 0) {
                        pivot = i;
                        break;
                    }
                }
                if (pivot < 0 && eq.constant != 0)
                    continue;

                // Odometer over every linear coordinate except the pivot.
                std::vector<std::int64_t> free_half;
                for (int i = 0; i < nlin; ++i)
                    if (i != pivot)
                        free_half.push_back(linear_half[static_cast<std::size_t>(i)]);
                std::vector<std::int64_t> v = box_start(free_half);
                do {
                    KDecomposition cand = at;
                    BigInt rest = -eq.constant;
                    for (int i = 0, j = 0; i < nlin; ++i) {
                        if (i == pivot)
                            continue;
                        const BigInt val = v[static_cast<std::size_t>(j++)];
                        layout.set_linear(cand, i, val);
                        rest -= eq.coefficients[static_cast<std::size_t>(i)] * val;
                    }
                    if (pivot >= 0) {
                        const BigInt& c = eq.coefficients[static_cast<std::size_t>(pivot)];
                        if (rest % c != 0)
                            continue;
                        const BigInt val = rest / c;
                        if (abs(val) > linear_half[static_cast<std::size_t>(pivot)])
                            continue;
                        layout.set_linear(cand, pivot, val);
                    }
                    canonicalize(cand, layout, quantified);
                    chunk.found.push_back(std::move(cand));
                } while (advance(v, free_half));
            }
        }
        return chunk;
    };

    unsigned threads = box.threads != 0 ? box.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, outer_total));
    std::vector<std::future<Chunk>> futures;
    const std::uint64_t per = (outer_total + threads - 1) / threads;
    for (std::uint64_t begin = 0; begin < outer_total; begin += per)
        futures.push_back(std::async(std::launch::async, work, begin, std::min(outer_total, begin + per)));

    SolutionSet result;
    result.space = spec;
    for (auto& f : futures) {
        Chunk c = f.get();
        result.evaluations += c.evaluations;
        result.solutions.insert(result.solutions.end(), std::make_move_iterator(c.found.begin()),
                                std::make_move_iterator(c.found.end()));
    }
    std::sort(result.solutions.begin(), result.solutions.end(), key_less);
    result.solutions.erase(std::unique(result.solutions.begin(), result.solutions.end()), result.solutions.end());

    for (const KDecomposition& s : result.solutions) {
        if (acs_equation_residual(s) != 0)
            throw std::logic_error("enumerate: emitted a decomposition with nonzero residual");
    }

    if (tangent_twist_u(spec.n) != 0 && !layout.d_top_active) {
        result.free_parameters.emplace_back("d_top");
        result.free_parameters.emplace_back("sign_a3");
    }

    if (spec == RingSpec(1, 1)) {
        const Sign s = quantified ? natural_tangent_sign(1) : box.fixed_signs->second;
        const auto all = all_solutions_s2_cp1(s);
        result.exhaustive = std::all_of(all.begin(), all.end(), [&](const KDecomposition& d) {
            return abs(d.d_sphere) <= box.d_sphere && abs(d.d_top) <= box.d_top;
        });
    }
    result.family_certificates = known_families(spec, box);
    return result;
}

} // namespace acs
