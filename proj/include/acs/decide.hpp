#ifndef ACS_DECIDE_HPP
#define ACS_DECIDE_HPP

#include <string>
#include <vector>

#include "acs/numtheory.hpp"

namespace acs {

enum class Verdict { Exists, NotExists, Unknown };

std::string verdict_name(Verdict v); ///< "exists" | "not_exists" | "unknown"

struct Reason {
    /// What the rule contributed to the verdict.
    enum class Outcome {
        Obstructs,  ///< a necessary condition fails
        Passes,     ///< a necessary condition holds
        NotApplicable,
        Constructs, ///< a known almost complex structure exists
        Open,       ///< nothing implemented settles the case
    };

    std::string rule;
    std::string statement;
    std::string citation;
    Outcome outcome = Outcome::Passes;

    friend bool operator==(const Reason&, const Reason&) = default;
};

std::string outcome_name(Reason::Outcome o);

struct Decision {
    Verdict verdict = Verdict::Unknown;
    std::vector<Reason> reasons;

    /// The reason that settles the verdict (first obstruction, first
    /// construction, or the open-case note).
    const Reason& decisive_reason() const;
};

/// S^{2m} x M with M closed, orientable, connected, of Euler characteristic chi_M.
struct GenericSpace {
    int m = 1;
    BigInt chi_M = 0;
};

struct CheckResult {
    bool pass = true;
    Reason reason;
};

/// 2^r (m-1)! | chi(S^{2m} x M) = 2 chi(M), 2^r the exact power of two in m.
CheckResult obstruction_euler_divisibility(const GenericSpace& s);

/// chi(M) != 0 mod 4, or chi(M) a power of two, excludes every m outside {1,2,3}.
CheckResult obstruction_chi_mod4_or_power_of_two(const GenericSpace& s);

/// S^{4p} x CP^n almost complex forces 2 (2p-1)! | n + 1.
CheckResult obstruction_s4p_cp(int p, int n);

Decision decide_cp(int m, int n);
Decision decide_sphere_product(int m, int n);
Decision decide_dold(int p, int q);
Decision decide_generic(const GenericSpace& s);

} // namespace acs

#endif
