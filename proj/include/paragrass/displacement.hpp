#pragma once

#include "paragrass/coherent.hpp"

namespace paragrass {

// Two displacement exponents over the unit ladder: the linear one uses only
// first powers, the power-sum one stacks all powers up to n.
enum class DisplacementVariant { Linear, PowerSum };

inline std::string displacement_variant_name(DisplacementVariant v) {
    return v == DisplacementVariant::Linear ? "D" : "Dprime";
}

// Anti-Hermitian exponent:  A+ z - z* A        (Linear)
//                           sum_k A+^k z^k - z*^k A^k   (PowerSum).
template <class C>
Element<C> displacement_exponent(int n, DisplacementVariant variant) {
    check_degree<C>(n);
    Element<C> a = annihilator<C>(n);
    Element<C> ad = a.adjoint();
    const int kmax = (variant == DisplacementVariant::Linear) ? 1 : n;
    Element<C> x = Element<C>::zero(n, PayloadKind::Operator);
    for (int k = 1; k <= kmax; ++k) {
        Element<C> zk = Element<C>::generator_power(n, 0, false, k);
        Element<C> zsk = Element<C>::generator_power(n, 0, true, k);
        x = x + ad.pow(k) * zk - zsk * a.pow(k);
    }
    return x;
}

template <class C>
Element<C> displacement_operator(int n, DisplacementVariant variant) {
    return exp_nilpotent(displacement_exponent<C>(n, variant));
}

template <class C>
Element<C> displaced_state(int n, DisplacementVariant variant) {
    return displacement_operator<C>(n, variant) * Element<C>::basis_ket(n, 0);
}

template <class C>
WeightTable<C> solve_weight_displaced(int n, DisplacementVariant variant, const GTable& table) {
    Element<C> ket = displaced_state<C>(n, variant);
    Element<C> proj = ket * ket.adjoint();
    WeightKind kind = (variant == DisplacementVariant::Linear) ? WeightKind::DisplacementLinear
                                                               : WeightKind::DisplacementPowerSum;
    return solve_weight_from_projector(proj, kind, table);
}

// Structural checks shared by both variants: anti-Hermitian exponent, exact
// unitarity, unit state norm, and (for n >= 2) failure of both the naive
// eigen-relation and the naive conjugation shift -- the displaced states are
// genuinely different from the ladder eigenstates.
template <class C>
Report verify_displacement(int n, const GTable& table) {
    Report rep;
    for (DisplacementVariant variant : {DisplacementVariant::Linear, DisplacementVariant::PowerSum}) {
        const std::string tag = displacement_variant_name(variant);
        Element<C> x = displacement_exponent<C>(n, variant);
        rep.add("displacement", tag + "-exponent-antihermitian", n, "", x.adjoint() == -x,
                "exponent is not anti-Hermitian");

        Element<C> d = exp_nilpotent(x);
        Element<C> dd = d.adjoint() * d;
        rep.add("displacement", tag + "-unitary", n, "", dd == Element<C>::identity_operator(n),
                "D+ D != 1");

        Element<C> ket = d * Element<C>::basis_ket(n, 0);
        rep.add("displacement", tag + "-state-unit-norm", n, "",
                ket.adjoint() * ket == Element<C>::one(n), "<z|z>_D != 1");

        if (n >= 2) {
            Element<C> a = annihilator<C>(n);
            rep.add("displacement", tag + "-not-eigenstate", n, "",
                    !(a * ket == zeta<C>(n) * ket), "displaced state is unexpectedly an eigenstate");
        }

        try {
            WeightTable<C> weights = solve_weight_displaced<C>(n, variant, table);
            bool ok = verify_resolution(weights, ket, table);
            rep.add("displacement", tag + "-weight-resolution", n, "", ok,
                    "solved weight table fails the resolution of identity");
        } catch (const std::exception& e) {
            rep.add("displacement", tag + "-weight-resolution", n, "", false, e.what());
        }
    }

    if (n == 2) {
        // The naive conjugation rule D+ A D = A + z fails already at n = 2;
        // record that the difference really is nonzero.
        Element<C> d = displacement_operator<C>(n, DisplacementVariant::Linear);
        Element<C> a = annihilator<C>(n);
        Element<C> conjugated = d.adjoint() * a * d;
        Element<C> shifted = a + zeta<C>(n) * Element<C>::identity_operator(n);
        rep.add("displacement", "D-conjugation-shift-fails", n, "", !(conjugated == shifted),
                "D+ A D unexpectedly equals A + z at n = 2");
    }
    return rep;
}

}  // namespace paragrass
