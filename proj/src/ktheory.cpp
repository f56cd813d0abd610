#include "acs/ktheory.hpp"

namespace acs {

std::string KernelGenerator::tag() const
{
    switch (kind) {
    case Kind::W:
        return "W(" + std::to_string(k) + ")";
    case Kind::EtaN:
        return "GEN_ETA_N";
    case Kind::TwoEtaN:
        return "TWO_GEN_ETA_N";
    }
    return "?";
}

KernelBasis kernel_basis(const RingSpec& spec)
{
    KernelBasis basis;
    basis.m_mod_4 = spec.m % 4;
    basis.n_mod_4 = spec.n % 4;
    basis.r = spec.r();
    for (int k = 1; k <= basis.r; ++k)
        basis.generators.push_back({KernelGenerator::Kind::W, k});

    if (basis.m_mod_4 % 2 == 1 || basis.n_mod_4 % 2 == 0)
        return basis;

    using Kind = KernelGenerator::Kind;
    if (basis.m_mod_4 == 0)
        basis.generators.push_back({basis.n_mod_4 == 3 ? Kind::EtaN : Kind::TwoEtaN, 0});
    else
        basis.generators.push_back({basis.n_mod_4 == 1 ? Kind::EtaN : Kind::TwoEtaN, 0});
    return basis;
}

KDecomposition KDecomposition::zero(const RingSpec& spec)
{
    KDecomposition dec;
    dec.spec = spec;
    dec.b.assign(static_cast<std::size_t>(kernel_coordinate_count(spec)), 0);
    dec.d.assign(static_cast<std::size_t>(spec.r()), 0);
    dec.sign_eta = natural_eta_sign(spec);
    dec.sign_a3 = natural_tangent_sign(spec.n);
    return dec;
}

void validate(const KDecomposition& dec)
{
    const RingSpec& spec = dec.spec;
    if (spec.m % 2 == 1 && spec.m != 1)
        throw UnsupportedError("sphere summand is only parametrised for m = 1 or even m (got m = " +
                               std::to_string(spec.m) + ")");
    if (spec.m % 2 == 0 && dec.d_sphere != 0)
        throw UsageError("a2 must vanish for even m: realification is injective on K(S^{4p})");
    const auto expected_b = static_cast<std::size_t>(kernel_coordinate_count(spec));
    if (dec.b.size() != expected_b)
        throw UsageError("expected " + std::to_string(expected_b) + " kernel coordinates, got " +
                         std::to_string(dec.b.size()));
    if (dec.d.size() != static_cast<std::size_t>(spec.r()))
        throw UsageError("expected " + std::to_string(spec.r()) + " d-coefficients, got " +
                         std::to_string(dec.d.size()));
    if (tangent_twist_u(spec.n) == 0 && dec.d_top != 0)
        throw UsageError("d_top has no meaning for even n");
}

BiGradedClass total_chern(const KDecomposition& dec)
{
    validate(dec);
    const RingSpec& spec = dec.spec;
    BiGradedClass c = chern_kernel_element(spec, dec.b, dec.sign_eta);
    if (dec.d_sphere != 0) {
        // c(2 d g) = (1 + y)^{2d} = 1 + 2d y
        c = bi_mul(c, BiGradedClass::one_plus_y(spec, TruncPoly::monomial(spec.n, 0, 2 * dec.d_sphere)));
    }
    c = bi_mul(c, BiGradedClass::from_base(spec, chern_tangent_stable(spec, dec.d, dec.d_top, dec.sign_a3)));
    return c;
}

BigInt acs_equation_residual(const KDecomposition& dec)
{
    return top_coefficient(total_chern(dec)) - top_coefficient(euler_class(dec.spec));
}

} // namespace acs
