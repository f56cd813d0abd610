#include "acs/decide.hpp"

#include <stdexcept>

namespace acs {

namespace {

constexpr const char* kCiteEuler =
    "top Chern class of a K-theory lift equals the Euler class; Chern numbers of "
    "K(S^{2m} x M) are multiples of (m-1)!, sharpened by 2^r for even m";
constexpr const char* kCiteCorollary =
    "consequence of the Euler divisibility obstruction: (m-1)! 2^r has a factor 8 or "
    "an odd prime factor for every m >= 4";
constexpr const char* kCiteS4p =
    "kernel classes of realification on K(S^{4p} ^ CP^n) have all Chern classes "
    "divisible by 4 (2p-1)! when n > 1";
constexpr const char* kCiteSpheres =
    "Borel-Serre (S^2, S^6 are the only almost complex spheres); Datta-Subramanian "
    "and Sutherland (products of two spheres)";
constexpr const char* kCiteTang = "Tang: S^{2m} x CP^2 iff m = 1,3; S^{2m} x CP^3 iff m = 1,2,3";
constexpr const char* kCiteS2S6 =
    "product of the almost complex S^2 or S^6 with the complex manifold CP^n";
constexpr const char* kCiteS4CP3 =
    "explicit stable classes on S^4 x CP^3 solving the top Chern class equation "
    "(see `acs enumerate --m 2 --n 3`); also Heaps, Tang";
constexpr const char* kCiteS4CPn =
    "S^4 x CP^{4q+1}: realification-kernel classes force 8 | c_top, but 2(4q+2) is not "
    "a multiple of 8; combined with the divisibility obstructions for other m";
constexpr const char* kCiteDoldCover =
    "D(2p, 2q+1) is double covered by S^{2p} x CP^{2q+1}, so obstructions on the cover "
    "descend";
constexpr const char* kCiteDoldOdd = "Tang: D(2p, 2q+1) with p odd carries no almost complex structure";

bool in_set(int v, std::initializer_list<int> set)
{
    for (int s : set)
        if (s == v)
            return true;
    return false;
}

void require_positive(int v, const char* name)
{
    if (v < 1)
        throw DomainError(std::string(name) + " must be >= 1 (got " + std::to_string(v) + ")");
}

Reason make(std::string rule, std::string statement, std::string citation, Reason::Outcome outcome)
{
    return Reason{std::move(rule), std::move(statement), std::move(citation), outcome};
}

std::string space_cp(int m, int n)
{
    return "S^" + std::to_string(2 * m) + " x CP^" + std::to_string(n);
}

} // namespace

std::string verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Exists:
        return "exists";
    case Verdict::NotExists:
        return "not_exists";
    case Verdict::Unknown:
        return "unknown";
    }
    return "unknown";
}

std::string outcome_name(Reason::Outcome o)
{
    switch (o) {
    case Reason::Outcome::Obstructs:
        return "obstructs";
    case Reason::Outcome::Passes:
        return "passes";
    case Reason::Outcome::NotApplicable:
        return "not_applicable";
    case Reason::Outcome::Constructs:
        return "constructs";
    case Reason::Outcome::Open:
        return "open";
    }
    return "open";
}

const Reason& Decision::decisive_reason() const
{
    Reason::Outcome wanted = Reason::Outcome::Open;
    if (verdict == Verdict::Exists)
        wanted = Reason::Outcome::Constructs;
    else if (verdict == Verdict::NotExists)
        wanted = Reason::Outcome::Obstructs;
    for (const Reason& r : reasons)
        if (r.outcome == wanted)
            return r;
    throw std::logic_error("decision without a decisive reason");
}

CheckResult obstruction_euler_divisibility(const GenericSpace& s)
{
    require_positive(s.m, "m");
    const unsigned r = two_adic_valuation(s.m);
    const BigInt modulus = ipow(2, r) * factorial(s.m - 1);
    const BigInt chi = 2 * s.chi_M;
    const bool pass = divides(modulus, chi);
    std::string stmt = "2^" + std::to_string(r) + " * " + std::to_string(s.m - 1) + "! = " + modulus.str() +
                       (pass ? " divides " : " does not divide ") + "chi(S^" + std::to_string(2 * s.m) +
                       " x M) = " + chi.str();
    return {pass, make("euler-divisibility", std::move(stmt), kCiteEuler,
                       pass ? Reason::Outcome::Passes : Reason::Outcome::Obstructs)};
}

CheckResult obstruction_chi_mod4_or_power_of_two(const GenericSpace& s)
{
    require_positive(s.m, "m");
    const BigInt residue = ((s.chi_M % 4) + 4) % 4;
    const bool not_mult4 = residue != 0;
    const bool pow2 = s.chi_M >= 1 && is_power_of_two(s.chi_M);
    const bool exempt = in_set(s.m, {1, 2, 3});
    if (!not_mult4 && !pow2) {
        return {true, make("chi-mod4-or-power-of-two",
                           "chi(M) = " + s.chi_M.str() + " is a multiple of 4 and not a positive power of two",
                           kCiteCorollary, Reason::Outcome::NotApplicable)};
    }
    std::string why = not_mult4 ? "chi(M) = " + s.chi_M.str() + " is not a multiple of 4"
                                : "chi(M) = " + s.chi_M.str() + " is a power of two";
    if (exempt) {
        return {true, make("chi-mod4-or-power-of-two", why + ", but m = " + std::to_string(s.m) + " is in {1,2,3}",
                           kCiteCorollary, Reason::Outcome::Passes)};
    }
    return {false, make("chi-mod4-or-power-of-two", why + " and m = " + std::to_string(s.m) + " is not in {1,2,3}",
                        kCiteCorollary, Reason::Outcome::Obstructs)};
}

CheckResult obstruction_s4p_cp(int p, int n)
{
    require_positive(p, "p");
    require_positive(n, "n");
    const BigInt modulus = 2 * factorial(2 * p - 1);
    const bool pass = divides(modulus, BigInt(n + 1));
    std::string stmt = "2 * " + std::to_string(2 * p - 1) + "! = " + modulus.str() +
                       (pass ? " divides " : " does not divide ") + "chi(CP^" + std::to_string(n) +
                       ") = " + std::to_string(n + 1);
    return {pass, make("s4p-cp-divisibility", std::move(stmt), kCiteS4p,
                       pass ? Reason::Outcome::Passes : Reason::Outcome::Obstructs)};
}

Decision decide_cp(int m, int n)
{
    require_positive(m, "m");
    require_positive(n, "n");
    const std::string space = space_cp(m, n);
    Decision d;

    if (n == 1) {
        const bool ok = in_set(m, {1, 2, 3});
        d.verdict = ok ? Verdict::Exists : Verdict::NotExists;
        d.reasons.push_back(make("cp1-sphere-product",
                                 space + (ok ? " is almost complex" : " is not almost complex") +
                                     ": S^{2m} x S^2 admits one iff m in {1,2,3}",
                                 kCiteSpheres, ok ? Reason::Outcome::Constructs : Reason::Outcome::Obstructs));
        return d;
    }
    if (m == 1 || m == 3) {
        d.verdict = Verdict::Exists;
        d.reasons.push_back(make("s2-s6-times-cp", space + " is a product of almost complex manifolds", kCiteS2S6,
                                 Reason::Outcome::Constructs));
        return d;
    }
    if (n == 3) {
        const bool ok = m == 2;
        d.verdict = ok ? Verdict::Exists : Verdict::NotExists;
        d.reasons.push_back(make("cp3-classification",
                                 space + (ok ? " is almost complex" : " is not almost complex") +
                                     ": S^{2m} x CP^3 admits one iff m in {1,2,3}",
                                 ok ? std::string(kCiteTang) + "; " + kCiteS4CP3 : std::string(kCiteTang),
                                 ok ? Reason::Outcome::Constructs : Reason::Outcome::Obstructs));
        return d;
    }
    if (n % 4 != 3) {
        d.verdict = Verdict::NotExists;
        d.reasons.push_back(make("cp-n-not-3-mod-4",
                                 space + " is not almost complex: for n > 1, n != 3 mod 4 only m in {1,3} occur",
                                 kCiteS4CPn, Reason::Outcome::Obstructs));
        return d;
    }

    // n = 3 mod 4, n > 3, m not in {1,3}: only the divisibility obstructions speak.
    CheckResult euler = obstruction_euler_divisibility({m, BigInt(n + 1)});
    d.reasons.push_back(euler.reason);
    bool obstructed = !euler.pass;
    if (m % 2 == 0) {
        CheckResult s4p = obstruction_s4p_cp(m / 2, n);
        d.reasons.push_back(s4p.reason);
        obstructed = obstructed || !s4p.pass;
    } else {
        d.reasons.push_back(make("s4p-cp-divisibility", "m = " + std::to_string(m) + " is odd", kCiteS4p,
                                 Reason::Outcome::NotApplicable));
    }
    if (obstructed) {
        d.verdict = Verdict::NotExists;
    } else {
        d.verdict = Verdict::Unknown;
        d.reasons.push_back(make("open-case",
                                 space + ": n = 3 mod 4, n > 3; every implemented obstruction passes and no "
                                         "construction is known",
                                 "no known result", Reason::Outcome::Open));
    }
    return d;
}

Decision decide_sphere_product(int m, int n)
{
    require_positive(m, "m");
    require_positive(n, "n");
    static const std::pair<int, int> known[] = {{1, 1}, {1, 3}, {3, 1}, {1, 2}, {2, 1}, {3, 3}};
    bool ok = false;
    for (const auto& [a, b] : known)
        ok = ok || (a == m && b == n);
    Decision d;
    d.verdict = ok ? Verdict::Exists : Verdict::NotExists;
    d.reasons.push_back(make("sphere-product-classification",
                             "S^" + std::to_string(2 * m) + " x S^" + std::to_string(2 * n) +
                                 (ok ? " is" : " is not") +
                                 " almost complex; exactly (m,n) in {(1,1),(1,2),(2,1),(1,3),(3,1),(3,3)} are",
                             kCiteSpheres, ok ? Reason::Outcome::Constructs : Reason::Outcome::Obstructs));
    return d;
}

Decision decide_dold(int p, int q)
{
    require_positive(p, "p");
    if (q < 0)
        throw DomainError("q must be >= 0 (got " + std::to_string(q) + ")");
    const std::string space = "D(" + std::to_string(2 * p) + ", " + std::to_string(2 * q + 1) + ")";
    const BigInt q1 = q + 1;
    Decision d;
    auto add = [&](std::string rule, bool applies, bool fires, std::string stmt, std::string cite) {
        Reason::Outcome o = !applies ? Reason::Outcome::NotApplicable
                                     : (fires ? Reason::Outcome::Obstructs : Reason::Outcome::Passes);
        d.reasons.push_back(make(std::move(rule), std::move(stmt), std::move(cite), o));
        return applies && fires;
    };

    bool obstructed = false;
    obstructed |= add("dold-p-odd", p % 2 == 1, true,
                      p % 2 == 1 ? "p = " + std::to_string(p) + " is odd" : "p = " + std::to_string(p) + " is even",
                      kCiteDoldOdd);

    if (p % 4 == 0) {
        const unsigned r = two_adic_valuation(p);
        const BigInt modulus = ipow(2, r - 2) * factorial(p - 1);
        const bool fires = !divides(modulus, q1);
        obstructed |= add("dold-p-0-mod-4", true, fires,
                          "2^" + std::to_string(r - 2) + " * " + std::to_string(p - 1) + "! = " + modulus.str() +
                              (fires ? " does not divide " : " divides ") + "q+1 = " + q1.str(),
                          std::string(kCiteDoldCover) + "; " + kCiteEuler);
    } else {
        add("dold-p-0-mod-4", false, false, "p = " + std::to_string(p) + " is not 0 mod 4", kCiteDoldCover);
    }

    if (p % 4 == 2) {
        const BigInt modulus = factorial(p - 1);
        const bool fires = !divides(modulus, q1);
        obstructed |= add("dold-p-2-mod-4", true, fires,
                          std::to_string(p - 1) + "! = " + modulus.str() + (fires ? " does not divide " : " divides ") +
                              "q+1 = " + q1.str(),
                          std::string(kCiteDoldCover) + "; " + kCiteS4p);
    } else {
        add("dold-p-2-mod-4", false, false, "p = " + std::to_string(p) + " is not 2 mod 4", kCiteDoldCover);
    }

    if (p == 2) {
        const bool fires = q % 2 == 0;
        obstructed |= add("dold-p-2-q-even", true, fires,
                          fires ? "q = " + std::to_string(q) + " is even, so the cover S^4 x CP^" +
                                      std::to_string(2 * q + 1) + " has 2q+1 = 1 mod 4"
                                : "q = " + std::to_string(q) + " is odd",
                          std::string(kCiteDoldCover) + "; " + kCiteS4CPn);
    } else {
        add("dold-p-2-q-even", false, false, "p = " + std::to_string(p) + " is not 2", kCiteDoldCover);
    }

    if (obstructed) {
        d.verdict = Verdict::NotExists;
    } else {
        d.verdict = Verdict::Unknown;
        d.reasons.push_back(make("open-case", space + ": no implemented obstruction fires", "no known result",
                                 Reason::Outcome::Open));
    }
    return d;
}

Decision decide_generic(const GenericSpace& s)
{
    require_positive(s.m, "m");
    Decision d;
    CheckResult euler = obstruction_euler_divisibility(s);
    CheckResult cor = obstruction_chi_mod4_or_power_of_two(s);
    d.reasons.push_back(euler.reason);
    d.reasons.push_back(cor.reason);
    if (!euler.pass || !cor.pass) {
        d.verdict = Verdict::NotExists;
    } else {
        d.verdict = Verdict::Unknown;
        d.reasons.push_back(make("open-case",
                                 "S^" + std::to_string(2 * s.m) +
                                     " x M: the Euler characteristic alone cannot certify existence",
                                 "no known result", Reason::Outcome::Open));
    }
    return d;
}

} // namespace acs
