#ifndef ACS_CHERN_HPP
#define ACS_CHERN_HPP

#include <span>
#include <vector>

#include "acs/ring.hpp"

namespace acs {

/// Orientation choice for a generator whose Chern class is only fixed up to sign.
enum class Sign : int { Plus = 1, Minus = -1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }
inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline Sign sign_of_parity(int k) { return (k % 2 == 0) ? Sign::Plus : Sign::Minus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Chern classes c_1..c_n of a bundle over CP^n, stored as integer multiples of x^i.
struct ChernSeq {
    int n = 1;
    int rank = 0;
    std::vector<BigInt> classes; ///< classes[i-1] = c_i, always length n

    ChernSeq(int n_, int rank_, std::vector<BigInt> c);

    const BigInt& c(int i) const { return classes[static_cast<std::size_t>(i - 1)]; }
    /// 1 + c_1 x + ... + c_n x^n
    TruncPoly total() const;
};

/// Power sums p_i = sum_k s_k^i of the Chern roots, as multiples of x^i.
struct PowerSums {
    int n = 1;
    std::vector<BigInt> sums; ///< sums[i-1] = p_i

    const BigInt& p(int i) const { return sums[static_cast<std::size_t>(i - 1)]; }
};

/// Newton's identities: p_i = c_1 p_{i-1} - c_2 p_{i-2} + ... + (-1)^{i-1} i c_i.
PowerSums newton_power_sums(const ChernSeq& c, int upto);
/// Inverse direction: i c_i = sum_{j=1}^{i} (-1)^{j-1} c_{i-j} p_j.
ChernSeq chern_from_power_sums(const PowerSums& p, int rank);

/// H^k over CP^n.
ChernSeq line_bundle_power(int n, const BigInt& k);

/// c(g^m) = 1 + (m-1)! y, the normalisation that fixes y.
BiGradedClass chern_bott_generator(const RingSpec& spec);

/// Total Chern class of g^m (beta - rank beta).
BiGradedClass chern_of_g_tensor(const RingSpec& spec, const ChernSeq& beta);

/// Total Chern class of w_k = g^m(H^k - 1) - conj(g^m(H^k - 1)), closed form.
BiGradedClass chern_wk(const RingSpec& spec, int k);

/// 1 + sign (m+n-1)! y x^n
BiGradedClass chern_g_eta_n(const RingSpec& spec, Sign sign);

/// Sign of c_{m+n}(g^m eta^n) read off from the Chern character; (-1)^n.
Sign natural_eta_sign(const RingSpec& spec);

/// Which closed form describes the kernel of realification on the smash summand.
enum class KernelCase : int {
    OddM = 1,         ///< m odd
    EvenMEvenN = 2,   ///< m, n even
    EtaGenerator = 3, ///< g^m eta^n is a generator
    TwoEtaGenerator = 4, ///< 2 g^m eta^n is a generator
};

KernelCase kernel_case(const RingSpec& spec);

/// r, or r + 1 when the kernel has an eta^n generator.
int kernel_coordinate_count(const RingSpec& spec);

/// prod_k c(w_k)^{b_k} * c(g^m eta^n)^{mult * b_{r+1}}, mult = 2 in the
/// TwoEtaGenerator case.
BiGradedClass chern_kernel_element(const RingSpec& spec, std::span<const BigInt> b, Sign sign);

/// c_i(conj a) = (-1)^i c_i(a); y counts as Chern degree m.
BiGradedClass conjugate_chern(const BiGradedClass& c);

/// 0 for even n, 1 for n = 3 mod 4, 2 for n = 1 mod 4.
int tangent_twist_u(int n);

/// Sign of c_n(eta^n) = (-1)^{n-1} (n-1)!.
Sign natural_tangent_sign(int n);

/// (1-x)^{n+1} (1 + sign (n-1)! x^n)^{u d_top} prod_k ((1+kx)/(1-kx))^{d_k}
TruncPoly chern_tangent_stable(const RingSpec& spec, std::span<const BigInt> d, const BigInt& d_top, Sign sign);

/// e(S^{2m}) e(CP^n) = (-2y)((-1)^n (n+1) x^n)
BiGradedClass euler_class(const RingSpec& spec);

} // namespace acs

#endif
