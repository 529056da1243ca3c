#pragma once

#include <string>
#include <vector>

#include "paragrass/berezin.hpp"
#include "paragrass/fock.hpp"
#include "paragrass/series.hpp"

namespace paragrass {

// z*^j z^j as a scalar-payload element (the natural variable for norms,
// normalization factors and integration weights).
template <class C>
Element<C> diagonal_power(int n, int j, int generators = 1, int gen = 0) {
    return Element<C>::generator_power(n, gen, true, j, generators) *
           Element<C>::generator_power(n, gen, false, j, generators);
}

// Coefficient of z*^k z^k in a scalar-kind element.  (Canonical storage is
// z^k z*^k; the two differ by the reordering sign (-1)^k.)
template <class C>
C diagonal_coefficient(const Element<C>& x, int k, int gen = 0) {
    Monomial m = Monomial::power(x.generators(), gen, false, k) *
                 Monomial::power(x.generators(), gen, true, k);
    C c = x.coefficient(m)(0, 0);
    return (k % 2 != 0) ? -c : c;
}

// Coefficients a_j of the squared normalization factor N^2 = sum a_j z*^j z^j.
template <class C>
struct NormalizationTable {
    int n = 1;
    std::vector<C> a;

    Element<C> squared_element(int generators = 1, int gen = 0) const {
        Element<C> e = Element<C>::zero(n, PayloadKind::Scalar, generators);
        for (int j = 0; j <= n; ++j)
            e = e + a[static_cast<size_t>(j)] * diagonal_power<C>(n, j, generators, gen);
        return e;
    }
    // N itself, via the square-root series on N^2 - 1.
    Element<C> element(int generators = 1, int gen = 0) const {
        Element<C> sq = squared_element(generators, gen);
        return series_apply(RationalSeries::sqrt_one_plus(), sq - Element<C>::one(n, generators));
    }
};

// Unnormalized right eigenstate of the ladder: sum_k (-1)^k z^k/alpha_{k-1}! |k>.
template <class C>
Element<C> right_cs_unnormalized(const LadderSpec<C>& spec, int generators = 1, int gen = 0) {
    spec.validate();
    Element<C> state(spec.n, generators, PayloadKind::Ket);
    for (int k = 0; k <= spec.n; ++k) {
        Matrix<C> col(spec.n + 1, 1);
        C coeff = scalar_traits<C>::one() / spec.alpha_factorial(k);
        if (k % 2 != 0) coeff = -coeff;
        col(k, 0) = coeff;
        state.add_term(Monomial::power(generators, gen, false, k), col);
    }
    return state;
}

// Unnormalized left eigenstate: sum_k (-1)^floor((k+1)/2) z^k/alpha_{k-1}! |k>.
template <class C>
Element<C> left_cs_unnormalized(const LadderSpec<C>& spec, int generators = 1, int gen = 0) {
    spec.validate();
    Element<C> state(spec.n, generators, PayloadKind::Ket);
    for (int k = 0; k <= spec.n; ++k) {
        Matrix<C> col(spec.n + 1, 1);
        C coeff = scalar_traits<C>::one() / spec.alpha_factorial(k);
        if (((k + 1) / 2) % 2 != 0) coeff = -coeff;
        col(k, 0) = coeff;
        state.add_term(Monomial::power(generators, gen, false, k), col);
    }
    return state;
}

// a_0 = 1, a_j = -sum_{m<j} a_m / F_{j-m}: exactly the convolution inverse
// of the norm-polynomial coefficients 1/F_k, which is what makes the
// sandwiched norm <z| N^2 |z> collapse to 1 term by term.
template <class C>
NormalizationTable<C> normalization_coeffs(const LadderSpec<C>& spec) {
    spec.validate();
    NormalizationTable<C> table{spec.n, {scalar_traits<C>::one()}};
    for (int j = 1; j <= spec.n; ++j) {
        C sum = scalar_traits<C>::zero();
        for (int m = 0; m < j; ++m)
            sum = sum + table.a[static_cast<size_t>(m)] / spec.modulus_factorial(j - m);
        table.a.push_back(-sum);
    }
    return table;
}

template <class C>
Element<C> right_cs(const LadderSpec<C>& spec, bool normalized, int generators = 1, int gen = 0) {
    Element<C> state = right_cs_unnormalized(spec, generators, gen);
    if (!normalized) return state;
    return normalization_coeffs(spec).element(generators, gen) * state;
}

template <class C>
Element<C> left_cs(const LadderSpec<C>& spec, bool normalized, int generators = 1, int gen = 0) {
    Element<C> state = left_cs_unnormalized(spec, generators, gen);
    if (!normalized) return state;
    return normalization_coeffs(spec).element(generators, gen) * state;
}

enum class WeightKind { NormalizedRight, UnnormalizedRight, DisplacementLinear, DisplacementPowerSum };

inline std::string weight_kind_name(WeightKind k) {
    switch (k) {
        case WeightKind::NormalizedRight: return "w";
        case WeightKind::UnnormalizedRight: return "wtilde";
        case WeightKind::DisplacementLinear: return "wD";
        case WeightKind::DisplacementPowerSum: return "wDprime";
    }
    return "?";
}

// Coefficients of a resolution-of-identity weight W = sum w_i z*^i z^i.
template <class C>
struct WeightTable {
    int n = 1;
    WeightKind kind = WeightKind::NormalizedRight;
    std::vector<C> w;

    Element<C> element(int generators = 1, int gen = 0) const {
        Element<C> e = Element<C>::zero(n, PayloadKind::Scalar, generators);
        for (int i = 0; i <= n; ++i)
            e = e + w[static_cast<size_t>(i)] * diagonal_power<C>(n, i, generators, gen);
        return e;
    }
};

// Integral of W |state><state| against the g-table; the resolution of
// identity holds when this returns the identity matrix.
template <class C>
Matrix<C> resolution_integral(const WeightTable<C>& weights, const Element<C>& ket, const GTable& table) {
    if (ket.kind() != PayloadKind::Ket) throw std::invalid_argument("resolution needs a ket element");
    Element<C> integrand = weights.element(ket.generators()) * (ket * ket.adjoint());
    return integrate(integrand, table);
}

template <class C>
bool verify_resolution(const WeightTable<C>& weights, const Element<C>& ket, const GTable& table) {
    return resolution_integral(weights, ket, table) == Matrix<C>::identity(ket.degree() + 1);
}

// Solves the moment system  integral[ W * proj ] = identity  for the weight
// coefficients, one diagonal entry at a time from k = n downward.  Each step
// introduces exactly one new unknown (the projector's (k,k) entry starts at
// generator degree k, so weights beyond n-k cannot contribute); a vanishing
// pivot means the moment system is singular and is reported as such.  The
// solved table is then checked against the full matrix identity.
template <class C>
WeightTable<C> solve_weight_from_projector(const Element<C>& proj, WeightKind kind, const GTable& table) {
    if (proj.kind() != PayloadKind::Operator)
        throw std::invalid_argument("weight solver needs an operator-kind projector");
    const int n = proj.degree();
    if (table.n != n) throw std::domain_error("g-table degree does not match projector");

    std::vector<Matrix<C>> moments;  // moments[i] = integral of z*^i z^i * proj
    for (int i = 0; i <= n; ++i)
        moments.push_back(integrate(diagonal_power<C>(n, i, proj.generators()) * proj, table));

    WeightTable<C> weights{n, kind, std::vector<C>(static_cast<size_t>(n) + 1, scalar_traits<C>::zero())};
    const C one = scalar_traits<C>::one();
    for (int k = n; k >= 0; --k) {
        int idx = n - k;
        C acc = one;
        for (int i = 0; i < idx; ++i)
            acc = acc - weights.w[static_cast<size_t>(i)] * moments[static_cast<size_t>(i)](k, k);
        C pivot = moments[static_cast<size_t>(idx)](k, k);
        if (scalar_traits<C>::is_zero(pivot))
            throw std::domain_error("singular moment system: zero pivot at diagonal index " +
                                    std::to_string(k));
        weights.w[static_cast<size_t>(idx)] = acc / pivot;
    }

    Element<C> check = weights.element(proj.generators()) * proj;
    if (integrate(check, table) != Matrix<C>::identity(n + 1))
        throw std::logic_error("solved weight table failed the resolution-of-identity check");
    return weights;
}

template <class C>
WeightTable<C> solve_weight(const LadderSpec<C>& spec, bool normalized, const GTable& table) {
    Element<C> ket = right_cs(spec, normalized);
    Element<C> proj = ket * ket.adjoint();
    return solve_weight_from_projector(proj,
                                       normalized ? WeightKind::NormalizedRight : WeightKind::UnnormalizedRight,
                                       table);
}

// Eigen-behaviour of the right states: A^k |z> = |z> z^k and the full grid
// of matrix elements <z| A+^j A^k |z> = z*^j z^k, plus unit norm.
template <class C>
Report verify_right_eigenproperties(const LadderSpec<C>& spec, const std::string& alpha_desc = "") {
    spec.validate();
    const int n = spec.n;
    Report rep;
    Element<C> ket = right_cs(spec, true);
    Element<C> bra = ket.adjoint();
    Element<C> ladder = ladder_operator(spec);

    rep.add("right", "unit-norm", n, alpha_desc, bra * ket == Element<C>::one(n), "<z|z> != 1");

    bool powers_ok = true;
    Element<C> applied = ket;
    for (int k = 1; k <= n && powers_ok; ++k) {
        applied = ladder * applied;  // A^k |z>
        Element<C> expected = ket * Element<C>::generator_power(n, 0, false, k);
        if (applied != expected) powers_ok = false;
    }
    rep.add("right", "eigen-powers", n, alpha_desc, powers_ok, "A^k |z> != |z> z^k");

    Element<C> adj = ladder.adjoint();
    bool grid_ok = true;
    std::vector<Element<C>> a_pow_ket;  // A^k |z>
    a_pow_ket.push_back(ket);
    for (int k = 1; k <= n; ++k) a_pow_ket.push_back(ladder * a_pow_ket.back());
    for (int j = 0; j <= n && grid_ok; ++j) {
        Element<C> left = bra;
        for (int t = 0; t < j; ++t) left = left * adj;  // <z| A+^j
        for (int k = 0; k <= n && grid_ok; ++k) {
            Element<C> got = left * a_pow_ket[static_cast<size_t>(k)];
            Element<C> expected = Element<C>::generator_power(n, 0, true, j) *
                                  Element<C>::generator_power(n, 0, false, k);
            if (got != expected) grid_ok = false;
        }
    }
    rep.add("right", "matrix-element-grid", n, alpha_desc, grid_ok, "<z| A+^j A^k |z> != z*^j z^k");
    return rep;
}

// Overlap of two unit-ladder coherent states in independent generators z and
// w, computed directly as <z| w>.  Callers compare it against the factored
// closed form below, which is exact at n = 1 only.
template <class C>
Element<C> overlap_two_generators(int n) {
    LadderSpec<C> spec = LadderSpec<C>::unit(n);
    Element<C> ket_z = right_cs(spec, true, 2, 0);
    Element<C> ket_w = right_cs(spec, true, 2, 1);
    return ket_z.adjoint() * ket_w;
}

// The tabulated closed form (sum_k z*^k w^k) N(z*z) N(w*w).  It reproduces
// the true overlap at n = 1 but not beyond: the normalization factors carry
// terms with odd starred/unstarred block degrees, and those do not commute
// with the kernel letters of the other generator in this algebra (same-type
// letters commute, so even degree does not imply central).  Callers compare
// against it and report the difference rather than assert equality.
template <class C>
Element<C> overlap_two_generators_factored(int n) {
    LadderSpec<C> spec = LadderSpec<C>::unit(n);
    NormalizationTable<C> norm = normalization_coeffs(spec);
    Element<C> kernel = Element<C>::zero(n, PayloadKind::Scalar, 2);
    for (int k = 0; k <= n; ++k)
        kernel = kernel + Element<C>::generator_power(n, 0, true, k, 2) *
                              Element<C>::generator_power(n, 1, false, k, 2);
    return kernel * norm.element(2, 0) * norm.element(2, 1);
}

// Measured sign s(k) in A^k ||z>_l = s(k) z^k ||z>_l: +1, -1, or 0 when the
// state is not a scaled eigenvector at that power.  The eigenvalue stands on
// the left, matching the defining relation A ||z>_l = z ||z>_l.
template <class C>
int left_power_sign(const LadderSpec<C>& spec, int k) {
    Element<C> state = left_cs_unnormalized(spec);
    Element<C> ladder = ladder_operator(spec);
    Element<C> applied = state;
    for (int t = 0; t < k; ++t) applied = ladder * applied;
    Element<C> scaled = Element<C>::generator_power(spec.n, 0, false, k) * state;
    if (applied == scaled) return 1;
    if (applied == -scaled) return -1;
    return 0;
}

template <class C>
Report verify_left_properties(const LadderSpec<C>& spec, const GTable& table,
                              const std::string& alpha_desc = "") {
    spec.validate();
    const int n = spec.n;
    Report rep;
    Element<C> state = left_cs_unnormalized(spec);
    Element<C> ladder = ladder_operator(spec);

    rep.add("left", "eigen-relation", n, alpha_desc,
            ladder * state == zeta<C>(n) * state, "A ||z>_l != z ||z>_l");

    // Hermitian norm form: <z||z>_l = 1 + sum_k z*^k z^k / F_k, which is the
    // same polynomial as for the right states, hence the same normalization.
    Element<C> norm_poly = state.adjoint() * state;
    Element<C> expected_poly = Element<C>::one(n);
    for (int k = 1; k <= n; ++k)
        expected_poly = expected_poly +
                        (scalar_traits<C>::one() / spec.modulus_factorial(k)) * diagonal_power<C>(n, k);
    rep.add("left", "norm-polynomial", n, alpha_desc, norm_poly == expected_poly,
            "left norm polynomial differs from 1 + sum z*^k z^k / F_k");

    NormalizationTable<C> norm = normalization_coeffs(spec);
    Element<C> normalized = norm.element() * state;
    rep.add("left", "normalized-unit-norm", n, alpha_desc,
            normalized.adjoint() * normalized == Element<C>::one(n),
            "left state does not normalize with the right-state factor");

    // Power signs: the tabulated claim is s(k) = (-1)^(k-1); the direct
    // engine measurement follows (-1)^(k(k-1)/2).  They agree for k <= 2 and
    // part company beyond, which is reported as a discrepancy, not a failure.
    for (int k = 1; k <= n; ++k) {
        int measured = left_power_sign(spec, k);
        int claimed = (k % 2 != 0) ? 1 : -1;          // (-1)^(k-1)
        int derived = ((k * (k - 1) / 2) % 2 == 0) ? 1 : -1;
        CheckRecord rec{"left", "power-sign-k" + std::to_string(k), n, alpha_desc, CheckStatus::Pass, ""};
        if (measured == 0) {
            rec.status = CheckStatus::Fail;
            rec.detail = "A^k ||z>_l is not proportional to z^k ||z>_l";
        } else if (measured != claimed) {
            rec.status = CheckStatus::Discrepancy;
            rec.detail = "measured sign " + std::to_string(measured) + " differs from tabulated (-1)^(k-1) = " +
                         std::to_string(claimed) +
                         (measured == derived ? "; matches the rederived (-1)^(k(k-1)/2)" : "");
        }
        rep.add(rec);
    }

    if (n > 1) {
        Element<C> lhs = ladder * normalized;
        Element<C> rhs = zeta<C>(n) * normalized;
        rep.add("left", "normalized-not-eigenstate", n, alpha_desc, !(lhs == rhs),
                "normalized left state unexpectedly an eigenstate");
    } else {
        rep.add("left", "coincides-with-right-n1", n, alpha_desc,
                state == right_cs_unnormalized(spec), "left and right states differ at n = 1");
    }

    // The left family resolves the identity with the *right* family's weight.
    try {
        WeightTable<C> weights = solve_weight(spec, true, table);
        bool ok = verify_resolution(weights, normalized, table);
        rep.add("left", "resolution-with-right-weight", n, alpha_desc, ok,
                "int W |z>_l <z|_l != 1 with the right-state weight table");
    } catch (const std::exception& e) {
        rep.add("left", "resolution-with-right-weight", n, alpha_desc, false, e.what());
    }
    return rep;
}

}  // namespace paragrass
