#pragma once

#include <random>

#include "paragrass/reference_tables.hpp"
#include "paragrass/zeta_rep.hpp"

namespace paragrass {

struct RunConfig {
    int n_max = 8;
    unsigned long seed = 12345;
    int random_alpha_count = 5;  // random ladders per n in the right/left suites
    int corrupt_g_index = -1;    // test hook: bump g_k before verifying

    GTable g_table(int n) const {
        GTable t = g_recurrence(n);
        if (corrupt_g_index >= 0 && corrupt_g_index <= n) t.g[static_cast<size_t>(corrupt_g_index)] += 1;
        return t;
    }
};

// Random nonzero Gaussian-rational ladder entries with small numerators, so
// exact runs stay cheap while still exercising generic parameter values.
template <class C>
LadderSpec<C> random_ladder_spec(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 5), den(1, 3), sign(0, 1), imag(0, 3);
    LadderSpec<C> spec{n, {}};
    for (int k = 0; k < n; ++k) {
        Rational re = make_rational(sign(rng) ? num(rng) : -num(rng), den(rng));
        Rational im = (imag(rng) == 0) ? make_rational(sign(rng) ? 1 : -1, den(rng)) : make_rational(0);
        GaussianRational g{re, im};
        if constexpr (scalar_traits<C>::is_exact) {
            spec.alpha.push_back(g);
        } else {
            spec.alpha.push_back(Complex64(g.re.get_d(), g.im.get_d()));
        }
    }
    return spec;
}

template <class C>
std::string describe_alpha(const LadderSpec<C>& spec) {
    std::string s = "alpha=(";
    for (size_t i = 0; i < spec.alpha.size(); ++i) {
        if (i) s += ",";
        s += scalar_traits<C>::to_string(spec.alpha[i]);
    }
    return s + ")";
}

template <class C>
Report run_core_suite(const RunConfig& cfg) {
    Report rep;
    for (int n = 1; n <= cfg.n_max; ++n) {
        rep.merge(verify_core_relations<C>(n));

        // Generator algebra on the element level.
        Element<C> z = zeta<C>(n), zs = zeta_star<C>(n);
        rep.add("core", "generator-anticommutator", n, "", (z * zs + zs * z).is_zero(),
                "z z* + z* z != 0");
        rep.add("core", "generator-nilpotency", n, "", (z.pow(n) * z).is_zero(), "z^(n+1) != 0");
        Element<C> a = annihilator<C>(n);
        rep.add("core", "ladder-generator-anticommutator", n, "", (z * a + a * z).is_zero(),
                "z A + A z != 0");
        bool crossing_ok = true;
        for (int k = 0; k <= n && crossing_ok; ++k) {
            Element<C> ket = Element<C>::basis_ket(n, k);
            Element<C> lhs = z * ket;
            Element<C> rhs = ket * z;
            if (k % 2 != 0) rhs = -rhs;
            if (!(lhs == rhs)) crossing_ok = false;
        }
        rep.add("core", "ket-crossing-parity", n, "", crossing_ok, "z |k> != (-1)^k |k> z");

        ZetaMatrixPair<C> mat = zeta_matrix_rep<C>(n);
        rep.add("core", "matrix-realization-relations", n, "", mat.all_relations_hold(),
                "matrix realization fails anticommutation/nilpotency");
    }

    if constexpr (!scalar_traits<C>::is_exact) {
        // Spin presets are irrational and therefore float-only.
        for (double j : {0.5, 1.0, 1.5, 2.0}) {
            LadderSpec<Complex64> spec = spin_ladder_spec(j);
            std::string desc = "spin j=" + std::to_string(j);
            try {
                polynomial_form(spec);
                diag_relation(spec);
                rep.add("core", "spin-preset-ladder", spec.n, desc, true);
            } catch (const std::exception& e) {
                rep.add("core", "spin-preset-ladder", spec.n, desc, false, e.what());
            }
        }
    }
    return rep;
}

template <class C>
Report run_berezin_suite(const RunConfig& cfg) {
    Report rep;
    for (int n = 1; n <= cfg.n_max; ++n) {
        GTable rec = cfg.g_table(n);
        GTable closed = g_closed(n);
        rep.add("berezin", "recurrence-vs-closed-form", n, "", rec.g == closed.g,
                "recurrence and closed form disagree");
        if (n % 2 != 0) {
            bool alternating = true;
            for (int k = 0; k <= n; ++k)
                if (rec.at(k) != (k % 2 == 0 ? 0 : 1)) alternating = false;
            rep.add("berezin", "odd-degree-pattern", n, "", alternating,
                    "odd-n table is not (0,1,0,1,...)");
        }

        // Linearity and the vanishing of off-diagonal moments.
        bool moments_ok = true;
        for (int i = 0; i <= n && moments_ok; ++i)
            for (int k = 0; k <= n && moments_ok; ++k) {
                Element<C> m = Element<C>::generator_power(n, 0, false, i) *
                               Element<C>::generator_power(n, 0, true, k);
                Matrix<C> got = integrate(m, rec);
                C expected = (i == k) ? scalar_traits<C>::from_rational(make_rational(rec.at(k)))
                                      : scalar_traits<C>::zero();
                if (!scalar_traits<C>::is_zero(got(0, 0) - expected)) moments_ok = false;
            }
        rep.add("berezin", "monomial-moments", n, "", moments_ok, "integral table mismatch");

        bool reversed_ok = true;
        for (int k = 0; k <= n && reversed_ok; ++k) {
            Element<C> m = Element<C>::generator_power(n, 0, true, k) *
                           Element<C>::generator_power(n, 0, false, k);
            C expected = scalar_traits<C>::from_rational(make_rational((k % 2 == 0 ? 1 : -1) * rec.at(k)));
            if (!scalar_traits<C>::is_zero(integrate(m, rec)(0, 0) - expected)) reversed_ok = false;
        }
        rep.add("berezin", "reversed-order-sign", n, "", reversed_ok,
                "z*^k z^k integral != (-1)^k g_k");
    }
    return rep;
}

template <class C>
Report run_right_suite(const RunConfig& cfg) {
    Report rep;
    std::mt19937_64 rng(cfg.seed);
    for (int n = 1; n <= cfg.n_max; ++n) {
        GTable table = cfg.g_table(n);
        LadderSpec<C> unit = LadderSpec<C>::unit(n);

        // Unit ladder, unit weight: the resolution of identity needs no
        // weight beyond W = 1 once the states are normalized.
        WeightTable<C> unit_weight{n, WeightKind::NormalizedRight,
                                   std::vector<C>(static_cast<size_t>(n) + 1, scalar_traits<C>::zero())};
        unit_weight.w[0] = scalar_traits<C>::one();
        rep.add("right", "unit-ladder-unit-weight-resolution", n, "alpha=1",
                verify_resolution(unit_weight, right_cs(unit, true), table),
                "int |z><z| != 1 for the unit ladder");

        rep.merge(verify_right_eigenproperties(unit, "alpha=1"));

        try {
            WeightTable<C> w = solve_weight(unit, true, table);
            bool reduces = scalar_traits<C>::is_zero(w.w[0] - scalar_traits<C>::one());
            for (int i = 1; i <= n; ++i)
                if (!scalar_traits<C>::is_zero(w.w[static_cast<size_t>(i)])) reduces = false;
            rep.add("right", "weight-reduction-alpha1", n, "alpha=1", reduces,
                    "normalized unit-ladder weight is not (1,0,...,0)");

            WeightTable<C> wt = solve_weight(unit, false, table);
            bool tilde_ok = scalar_traits<C>::is_zero(wt.w[0] - scalar_traits<C>::one()) &&
                            (n < 1 || scalar_traits<C>::is_zero(wt.w[1] + scalar_traits<C>::one()));
            for (int i = 2; i <= n; ++i)
                if (!scalar_traits<C>::is_zero(wt.w[static_cast<size_t>(i)])) tilde_ok = false;
            rep.add("right", "unnormalized-weight-reduction-alpha1", n, "alpha=1", tilde_ok,
                    "unnormalized unit-ladder weight is not 1 - z*z");
        } catch (const std::exception& e) {
            rep.add("right", "weight-reduction-alpha1", n, "alpha=1", false, e.what());
        }

        for (int t = 0; t < cfg.random_alpha_count; ++t) {
            LadderSpec<C> spec = random_ladder_spec<C>(n, rng);
            std::string desc = describe_alpha(spec);
            try {
                Element<C> ket = right_cs(spec, true);
                rep.add("right", "random-alpha-unit-norm", n, desc,
                        ket.adjoint() * ket == Element<C>::one(n), "<z|z> != 1");
                WeightTable<C> w = solve_weight(spec, true, table);
                rep.add("right", "random-alpha-weight-resolution", n, desc,
                        verify_resolution(w, ket, table), "resolution fails with solved weight");
                WeightTable<C> wt = solve_weight(spec, false, table);
                rep.add("right", "random-alpha-unnormalized-weight-resolution", n, desc,
                        verify_resolution(wt, right_cs(spec, false), table),
                        "resolution fails with solved unnormalized weight");
            } catch (const std::exception& e) {
                rep.add("right", "random-alpha-weight-resolution", n, desc, false, e.what());
            }
        }

        if (n <= 4) {
            Element<C> overlap = overlap_two_generators<C>(n);
            Element<C> factored = overlap_two_generators_factored<C>(n);
            CheckRecord rec{"right", "two-generator-overlap-factored-form", n, "alpha=1",
                            CheckStatus::Pass, ""};
            if (!(overlap == factored)) {
                // The tabulated factorization is exact only at n = 1; beyond
                // that the deviation is expected and documented, while the
                // engine overlap itself stays pinned by the unit-norm and
                // eigen checks (and by frozen expansions in the test suite).
                rec.status = (n == 1) ? CheckStatus::Fail : CheckStatus::Discrepancy;
                rec.detail = "engine <z|w> minus factored form = " + (overlap - factored).to_string();
            }
            rep.add(rec);
        }
    }
    return rep;
}

template <class C>
Report run_left_suite(const RunConfig& cfg) {
    Report rep;
    std::mt19937_64 rng(cfg.seed + 1);
    for (int n = 1; n <= cfg.n_max; ++n) {
        GTable table = cfg.g_table(n);
        rep.merge(verify_left_properties(LadderSpec<C>::unit(n), table, "alpha=1"));
        if (n <= 5) {
            LadderSpec<C> spec = random_ladder_spec<C>(n, rng);
            rep.merge(verify_left_properties(spec, table, describe_alpha(spec)));
        }
    }
    return rep;
}

template <class C>
Report run_displacement_suite(const RunConfig& cfg) {
    Report rep;
    for (int n = 1; n <= cfg.n_max; ++n) {
        GTable table = cfg.g_table(n);
        rep.merge(verify_displacement<C>(n, table));

        for (DisplacementVariant v : {DisplacementVariant::Linear, DisplacementVariant::PowerSum}) {
            const std::string tag = displacement_variant_name(v);
            const bool hard = (n == 2);  // n = 2 references are exact; n = 3 are literal readings
            if (auto terms = reference_displaced_terms(n, v))
                rep.merge(compare_state_to_reference(displaced_state<C>(n, v), *terms, "displacement",
                                                     tag + "-reference-expansion", hard));
            if (auto ref = reference_displaced_weight(n, v)) {
                try {
                    rep.merge(compare_weight_to_reference(solve_weight_displaced<C>(n, v, table), *ref,
                                                          "displacement", tag + "-reference-weight", hard));
                } catch (const std::exception& e) {
                    rep.add("displacement", tag + "-reference-weight", n, "", false, e.what());
                }
            }
        }
    }
    return rep;
}

template <class C>
Report run_scope(const std::string& scope, const RunConfig& cfg) {
    Report rep;
    if (scope == "core" || scope == "all") rep.merge(run_core_suite<C>(cfg));
    if (scope == "berezin" || scope == "all") rep.merge(run_berezin_suite<C>(cfg));
    if (scope == "right" || scope == "all") rep.merge(run_right_suite<C>(cfg));
    if (scope == "left" || scope == "all") rep.merge(run_left_suite<C>(cfg));
    if (scope == "displacement" || scope == "all") rep.merge(run_displacement_suite<C>(cfg));
    rep.sort();
    return rep;
}

}  // namespace paragrass
