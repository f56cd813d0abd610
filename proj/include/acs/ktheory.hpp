#ifndef ACS_KTHEORY_HPP
#define ACS_KTHEORY_HPP

#include <string>
#include <vector>

#include "acs/chern.hpp"

namespace acs {

/// Generators of ker(realification) on the smash summand K(S^{2m} ^ CP^n).
struct KernelGenerator {
    enum class Kind { W, EtaN, TwoEtaN };
    Kind kind = Kind::W;
    int k = 0; ///< index for W, 0 otherwise

    std::string tag() const;
    friend bool operator==(const KernelGenerator&, const KernelGenerator&) = default;
};

struct KernelBasis {
    int m_mod_4 = 0;
    int n_mod_4 = 0;
    int r = 0;
    std::vector<KernelGenerator> generators;
};

KernelBasis kernel_basis(const RingSpec& spec);

/// a = a1 + a2 + a3 in K(S^{2m} x CP^n), with a1 in the realification kernel
/// of the smash summand, a2 in the kernel on K(S^{2m}) and a3 realifying to
/// the tangent bundle of CP^n.
///
/// a2 is parametrised only for m = 1 (a2 = 2 d_sphere g). For even m it
/// vanishes, so d_sphere must be 0. Odd m >= 3 is rejected.
struct KDecomposition {
    RingSpec spec;
    std::vector<BigInt> b; ///< kernel coordinates, kernel_coordinate_count(spec) entries
    BigInt d_sphere = 0;
    std::vector<BigInt> d; ///< r entries
    BigInt d_top = 0;      ///< exponent of the eta^n twist; must be 0 when n is even
    Sign sign_eta = Sign::Plus;
    Sign sign_a3 = Sign::Plus;

    /// All-zero parameters with the natural signs.
    static KDecomposition zero(const RingSpec& spec);

    friend bool operator==(const KDecomposition&, const KDecomposition&) = default;
};

/// Throws UsageError / UnsupportedError on invariant violations.
void validate(const KDecomposition& dec);

BiGradedClass total_chern(const KDecomposition& dec);

/// top(c(a)) - top(e(S^{2m} x CP^n)); zero iff a satisfies the top Chern
/// class condition.
BigInt acs_equation_residual(const KDecomposition& dec);

} // namespace acs

#endif
