#ifndef ACS_DIOPHANTINE_HPP
#define ACS_DIOPHANTINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acs/ktheory.hpp"

namespace acs {

/// Symmetric half-widths per parameter group.
struct SearchBox {
    std::int64_t b = 0;
    std::int64_t d_sphere = 0;
    std::int64_t d = 0;
    std::int64_t d_top = 0;

    /// When set, only this (sign_eta, sign_a3) pair is searched and
    /// solutions are reported as found. Otherwise both signs are searched and
    /// every solution is reported in its natural-sign representative.
    std::optional<std::pair<Sign, Sign>> fixed_signs;

    unsigned threads = 0; ///< 0 = hardware concurrency

    static SearchBox uniform(std::int64_t half_width);
};

/// k -> base + k * step on every integer coordinate; signs come from base.
struct AffineFamily {
    KDecomposition base;
    KDecomposition step;

    KDecomposition at(std::int64_t k) const;
};

struct FamilyCertificate {
    std::string description;
    AffineFamily family;
    std::int64_t k_lo = 0;
    std::int64_t k_hi = 0;
    bool verified = false;
};

struct SolutionSet {
    RingSpec space;
    std::vector<KDecomposition> solutions;
    /// True only when every integer solution provably lies in the box.
    bool exhaustive = false;
    std::vector<FamilyCertificate> family_certificates;
    /// Parameters that never reach the top Chern class; pinned to 0 / natural sign.
    std::vector<std::string> free_parameters;
    std::uint64_t evaluations = 0;
};

/// Whether the sign of the g^m eta^n generator reaches the residual.
bool sign_eta_relevant(const RingSpec& spec);
/// Whether d_top (and its sign) reaches the residual: n odd and m odd.
bool d_top_relevant(const RingSpec& spec);

/// Parameter tuple used for ordering: b..., d_sphere, d..., d_top, sign_eta, sign_a3.
std::vector<BigInt> parameter_key(const KDecomposition& dec);

/// All decompositions in the box with zero residual, deduplicated and sorted
/// lexicographically by parameter_key. m must be 1 or 2.
SolutionSet enumerate(const RingSpec& spec, const SearchBox& box);

bool verify_family(const RingSpec& spec, const AffineFamily& family, std::int64_t k_lo, std::int64_t k_hi);

/// residual = sum coefficients[i] * variables[i] + constant. The variables
/// are the coordinates the residual is affine in (b_1.., and d_sphere for
/// m = 1); the remaining parameters are taken from `at`.
struct AffineEquation {
    std::vector<std::string> variables;
    std::vector<BigInt> coefficients;
    BigInt constant;
    /// Overall factor by which the residual differs from the customary
    /// hand-written form of the equation; display = residual / display_scale.
    BigInt display_scale = 1;

    /// e.g. "b1 + 6*b2 = -1"
    std::string display() const;
};

/// Supported for (m, n) in {(1,1), (1,2), (2,3)}.
AffineEquation example_equation_coefficients(const RingSpec& spec, const KDecomposition& at);

/// Affine coefficients of the residual in the linear coordinates, computed
/// by evaluation at 0 and at unit vectors. Works for any supported spec.
AffineEquation residual_affine_form(const KDecomposition& at);

/// Every integer solution for S^2 x CP^1 with the given sign on the eta twist,
/// via the divisor argument on the bilinear residual.
std::vector<KDecomposition> all_solutions_s2_cp1(Sign sign_a3);

} // namespace acs

#endif
