// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Everything on the exact backend is checked with equality; the float spin
// presets run at an absolute tolerance of 1e-10.

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <paragrass/displacement.hpp>
#include <paragrass/verify.hpp>

#include "naive_algebra.hpp"

using namespace paragrass;
using C = GaussianRational;

namespace {

int failed_criteria = 0;
std::vector<std::string> notes;

void note(const std::string& s) { notes.push_back(s); }

void criterion(int idx, const std::string& desc, bool ok) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", idx, desc.c_str());
    for (const std::string& s : notes) std::printf("           note: %s\n", s.c_str());
    notes.clear();
    if (!ok) ++failed_criteria;
}

C q(long num, long den = 1) { return C(make_rational(num, den)); }

LadderSpec<C> random_spec(int n, std::mt19937& rng, bool real_only = false) {
    std::uniform_int_distribution<int> num(1, 6), den(1, 3), sign(0, 1), imag(0, 3);
    LadderSpec<C> spec{n, {}};
    for (int k = 0; k < n; ++k) {
        C a = q(sign(rng) ? num(rng) : -num(rng), den(rng));
        if (!real_only && imag(rng) == 0) a = a + scalar_traits<C>::i() * q(num(rng), den(rng));
        spec.alpha.push_back(a);
    }
    return spec;
}

Element<C> zpow(int n, int k) { return Element<C>::generator_power(n, 0, false, k); }

Element<C> mono2(int n, int u0, int u1, int s0, int s1) {
    return Element<C>::generator_power(n, 0, false, u0, 2) *
           Element<C>::generator_power(n, 1, false, u1, 2) *
           Element<C>::generator_power(n, 0, true, s0, 2) *
           Element<C>::generator_power(n, 1, true, s1, 2);
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(PARAGRASS_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// ---- criterion 4 oracle: series reciprocal by Newton doubling ----------

std::vector<C> convolve_prefix(const std::vector<C>& a, const std::vector<C>& b, size_t len) {
    std::vector<C> out(len, scalar_traits<C>::zero());
    for (size_t i = 0; i < len; ++i)
        for (size_t j = 0; j <= i; ++j) {
            if (j >= a.size() || i - j >= b.size()) continue;
            out[i] = out[i] + a[j] * b[i - j];
        }
    return out;
}

// X <- X (2 - B X); each pass doubles the order to which B X = 1 holds.
std::vector<C> series_inverse_newton(const std::vector<C>& b) {
    std::vector<C> x{scalar_traits<C>::one() / b[0]};
    while (x.size() < b.size()) {
        size_t len = std::min(b.size(), x.size() * 2);
        std::vector<C> bx = convolve_prefix(b, x, len);
        std::vector<C> two_minus(len, scalar_traits<C>::zero());
        two_minus[0] = q(2);
        for (size_t i = 0; i < len; ++i) two_minus[i] = two_minus[i] - bx[i];
        x = convolve_prefix(x, two_minus, len);
    }
    return x;
}

// ---- criterion 5 oracle: moment equations solved from scratch ----------

std::vector<C> moment_solved_weights(const LadderSpec<C>& spec, bool normalized, const GTable& table) {
    const int n = spec.n;
    std::vector<C> a(static_cast<size_t>(n) + 1, scalar_traits<C>::zero());
    a[0] = scalar_traits<C>::one();
    if (normalized)
        for (int m = 1; m <= n; ++m) {
            C acc = scalar_traits<C>::zero();
            for (int j = 0; j < m; ++j)
                acc = acc + a[static_cast<size_t>(j)] / spec.modulus_factorial(m - j);
            a[static_cast<size_t>(m)] = -acc;
        }
    std::vector<C> w(static_cast<size_t>(n) + 1, scalar_traits<C>::zero());
    for (int k = n; k >= 0; --k) {
        C rhs = spec.modulus_factorial(k);
        C pivot = scalar_traits<C>::zero();
        for (int i = 0; i + k <= n; ++i)
            for (int j = 0; i + j + k <= n; ++j) {
                C term = a[static_cast<size_t>(j)] * C(table.at(i + j + k));
                if ((i + j + i * j + (i + j) * k) % 2 != 0) term = -term;
                if (i == n - k)
                    pivot = pivot + term;
                else
                    rhs = rhs - term * w[static_cast<size_t>(i)];
            }
        w[static_cast<size_t>(n - k)] = rhs / pivot;
    }
    return w;
}

// ---- criteria ------------------------------------------------------------

bool criterion1() {
    for (int n = 1; n <= 8; ++n) {
        Report rep = verify_core_relations<C>(n);
        if (!rep.all_pass() || rep.discrepancies() != 0) return false;
    }
    return true;
}

bool criterion2() {
    for (int n = 1; n <= 12; ++n)
        if (g_recurrence(n).g != g_closed(n).g) return false;
    if (g_recurrence(1).g != std::vector<long>{0, 1}) return false;
    if (g_recurrence(2).g != std::vector<long>{-1, 2, 1}) return false;
    if (g_recurrence(3).g != std::vector<long>{0, 1, 0, 1}) return false;
    return true;
}

bool criterion3() {
    for (int n = 1; n <= 8; ++n) {
        GTable table = g_recurrence(n);
        WeightTable<C> unit_weight{n, WeightKind::NormalizedRight,
                                   std::vector<C>(static_cast<size_t>(n) + 1, scalar_traits<C>::zero())};
        unit_weight.w[0] = scalar_traits<C>::one();
        if (!verify_resolution(unit_weight, right_cs(LadderSpec<C>::unit(n), true), table)) return false;
    }
    return true;
}

bool criterion4() {
    std::mt19937 rng(41);
    auto matches_oracle = [](const LadderSpec<C>& spec) {
        std::vector<C> b;
        for (int k = 0; k <= spec.n; ++k) b.push_back(scalar_traits<C>::one() / spec.modulus_factorial(k));
        std::vector<C> oracle = series_inverse_newton(b);
        std::vector<C> engine = normalization_coeffs(spec).a;
        if (engine.size() != oracle.size()) return false;
        for (size_t i = 0; i < oracle.size(); ++i)
            if (!(engine[i] == oracle[i])) return false;
        return true;
    };
    for (int n = 2; n <= 6; ++n) {
        if (!matches_oracle(LadderSpec<C>::unit(n))) return false;
        for (int rep = 0; rep < 50; ++rep)
            if (!matches_oracle(random_spec(n, rng))) return false;
    }
    for (int rep = 0; rep < 20; ++rep) {
        LadderSpec<C> spec = random_spec(4, rng);
        std::vector<C> a = normalization_coeffs(spec).a;
        C F1 = spec.modulus_factorial(1), F2 = spec.modulus_factorial(2), F3 = spec.modulus_factorial(3);
        C one = scalar_traits<C>::one();
        if (!(a[0] == one)) return false;
        if (!(a[1] == -one / F1)) return false;
        if (!(a[2] == -one / F2 + one / (F1 * F1))) return false;
        if (!(a[3] == -one / F3 + q(2) / (F1 * F2) - one / (F1 * F1 * F1))) return false;
    }
    return true;
}

bool criterion5() {
    std::mt19937 rng(51);
    bool ok = true;
    for (int n = 1; n <= 6 && ok; ++n) {
        GTable table = g_recurrence(n);
        for (int rep = 0; rep < 4 && ok; ++rep) {
            LadderSpec<C> spec = rep == 0 ? LadderSpec<C>::unit(n) : random_spec(n, rng);
            for (bool normalized : {true, false}) {
                WeightTable<C> w = solve_weight(spec, normalized, table);
                std::vector<C> oracle = moment_solved_weights(spec, normalized, table);
                for (size_t i = 0; i < oracle.size(); ++i)
                    if (!(w.w[i] == oracle[i])) ok = false;
                if (!verify_resolution(w, right_cs(spec, normalized), table)) ok = false;
            }
        }
        // alpha = 1 reductions: trivial normalized weight, two-term unnormalized one
        WeightTable<C> w1 = solve_weight(LadderSpec<C>::unit(n), true, table);
        if (!(w1.w[0] == q(1))) ok = false;
        for (size_t i = 1; i < w1.w.size(); ++i)
            if (!scalar_traits<C>::is_zero(w1.w[i])) ok = false;
        WeightTable<C> wt1 = solve_weight(LadderSpec<C>::unit(n), false, table);
        if (!(wt1.element() == Element<C>::one(n) - diagonal_power<C>(n, 1))) ok = false;
    }

    // third-order closed forms at random rational parameters
    GTable table3 = g_recurrence(3);
    bool sign_differs_somewhere = false;
    for (int rep = 0; rep < 10 && ok; ++rep) {
        LadderSpec<C> spec = random_spec(3, rng, true);
        C one = scalar_traits<C>::one();
        C F1 = spec.modulus_factorial(1), F2 = spec.modulus_factorial(2), F3 = spec.modulus_factorial(3);
        std::vector<C> wt = solve_weight(spec, false, table3).w;
        if (!(wt[0] == F3 && wt[1] == -F2 && wt[2] == F1 - F3 && wt[3] == F2 - one)) ok = false;

        std::vector<C> a = normalization_coeffs(spec).a;
        std::vector<C> w = solve_weight(spec, true, table3).w;
        if (!(w[0] == F3)) ok = false;
        if (!(w[1] == -F2 - a[1] * F3)) ok = false;
        if (!(w[2] == F1 - F3 - a[1] * (F2 + a[1] * F3) - a[2] * F3)) ok = false;
        // last entry from the zeroth moment equation (note the -a3 w0 term)
        C from_moment = -one - w[1] - a[1] * w[0] - a[3] * w[0] - a[1] * w[2] - a[2] * w[1];
        if (!(w[3] == from_moment)) ok = false;
        C tabulated = from_moment + q(2) * a[3] * w[0];  // sign of the a3 term flipped
        if (!scalar_traits<C>::is_zero(a[3]) && !(w[3] == tabulated)) sign_differs_somewhere = true;
    }
    if (ok && sign_differs_somewhere)
        note("documented discrepancy: the tabulated closed form for the last normalized third-order "
             "weight carries the opposite sign on its a3 term; the moment equations force the engine "
             "value (the two agree only when a3 = 0, e.g. at alpha = 1)");
    return ok;
}

bool criterion6() {
    std::mt19937 rng(61);
    for (int n = 1; n <= 4; ++n) {
        Report rep = verify_right_eigenproperties(LadderSpec<C>::unit(n));
        if (!rep.all_pass()) return false;
        if (n >= 2) {
            Report rnd = verify_right_eigenproperties(random_spec(n, rng), "random");
            if (!rnd.all_pass()) return false;
        }
        // overlap computed from the states themselves vs an independent
        // transposition-counting oracle
        Element<C> bra = right_cs(LadderSpec<C>::unit(n), true, 2, 0).adjoint();
        Element<C> ket = right_cs(LadderSpec<C>::unit(n), true, 2, 1);
        naive::NaiveElement<C> oracle = naive::multiply(naive::from_engine(bra), naive::from_engine(ket));
        if (!naive::equal(naive::from_engine(overlap_two_generators<C>(n)), oracle)) return false;
    }
    if (!(overlap_two_generators<C>(1) == overlap_two_generators_factored<C>(1))) return false;
    Element<C> diff2 = overlap_two_generators<C>(2) - overlap_two_generators_factored<C>(2);
    if (!(diff2 == -mono2(2, 0, 2, 1, 1) - mono2(2, 1, 1, 2, 0))) return false;
    note("documented discrepancy: the factored closed form for the two-generator overlap is exact at "
         "n = 1 only; for n >= 2 the engine overlap (pinned above by an independent oracle) differs "
         "from it by frozen terms because even-degree factors are not central in this algebra");
    return true;
}

bool criterion7() {
    std::mt19937 rng(71);
    for (int n = 1; n <= 5; ++n) {
        GTable table = g_recurrence(n);
        Report rep = verify_left_properties(LadderSpec<C>::unit(n), table, "alpha=1");
        if (rep.failures() != 0) return false;
        Report rnd = verify_left_properties(random_spec(n, rng), table, "random");
        if (rnd.failures() != 0) return false;
        size_t expected_drift = 0;
        for (int k = 1; k <= n; ++k)
            if (k % 4 == 0 || k % 4 == 3) ++expected_drift;
        if (rep.discrepancies() != expected_drift || rnd.discrepancies() != expected_drift) return false;
    }
    LadderSpec<C> spec5 = LadderSpec<C>::unit(5);
    if (left_power_sign(spec5, 1) != 1) return false;
    if (left_power_sign(spec5, 2) != -1) return false;
    if (left_power_sign(spec5, 3) != -1) return false;
    note("documented discrepancy: the measured repeated-application sign follows (-1)^(k(k-1)/2), so "
         "s(3) = -1 while the tabulated alternating rule (-1)^(k-1) expects +1; s(1) and s(2) match");
    return true;
}

bool criterion8() {
    bool ok = true;
    for (int n = 2; n <= 6 && ok; ++n) {
        Report rep = verify_displacement<C>(n, g_recurrence(n));
        if (!rep.all_pass()) ok = false;
    }
    // second-order reference expansions and weights are exact
    GTable table2 = g_recurrence(2);
    for (DisplacementVariant v : {DisplacementVariant::Linear, DisplacementVariant::PowerSum}) {
        Report rs = compare_state_to_reference(displaced_state<C>(2, v), *reference_displaced_terms(2, v),
                                               "displacement", "ref", true);
        Report rw = compare_weight_to_reference(solve_weight_displaced<C>(2, v, table2),
                                                *reference_displaced_weight(2, v), "displacement", "ref",
                                                true);
        if (!rs.all_pass() || !rw.all_pass()) ok = false;
    }
    // third-order tables are compared coefficient by coefficient; mismatches
    // are logged while the engine series passes norm/resolution above
    GTable table3 = g_recurrence(3);
    auto flagged_ids = [](const Report& rep) {
        std::string ids;
        for (const CheckRecord& rec : rep.records)
            if (rec.status != CheckStatus::Pass) ids += (ids.empty() ? "" : ", ") + rec.id;
        return ids;
    };
    for (DisplacementVariant v : {DisplacementVariant::Linear, DisplacementVariant::PowerSum}) {
        const std::string tag = displacement_variant_name(v);
        Report rs = compare_state_to_reference(displaced_state<C>(3, v), *reference_displaced_terms(3, v),
                                               "displacement", tag, false);
        Report rw = compare_weight_to_reference(solve_weight_displaced<C>(3, v, table3),
                                                *reference_displaced_weight(3, v), "displacement", tag,
                                                false);
        if (rs.failures() != 0 || rw.failures() != 0) ok = false;
        size_t expected_state = (v == DisplacementVariant::Linear) ? 1 : 4;
        size_t expected_weight = (v == DisplacementVariant::Linear) ? 2 : 4;
        if (rs.discrepancies() != expected_state || rw.discrepancies() != expected_weight) ok = false;
        note("third-order " + tag + " reference comparison: mismatching entries logged as [" +
             flagged_ids(rs) + "] and [" + flagged_ids(rw) +
             "]; the engine series itself passes unit-norm, unitarity and resolution exactly");
    }
    return ok;
}

bool criterion9() {
    std::mt19937 rng(91);
    for (int n = 2; n <= 6; ++n)
        for (int rep = 0; rep < 100; ++rep) {
            LadderSpec<C> spec = random_spec(n, rng);
            try {
                polynomial_form(spec);
                std::vector<C> diag = diag_relation(spec);
                if (!(diag.back() == spec.modulus_factorial(n))) return false;
            } catch (const std::exception&) {
                return false;
            }
        }
    float_tolerance() = 1e-10;
    for (double j : {0.5, 1.0, 1.5, 2.0}) {
        LadderSpec<Complex64> spec = spin_ladder_spec(j);
        try {
            polynomial_form(spec);
            diag_relation(spec);
        } catch (const std::exception&) {
            return false;
        }
        Report rep = verify_core_relations<Complex64>(spec.n);
        if (!rep.all_pass()) return false;
    }
    return true;
}

bool criterion10() {
    if (run_cli("verify all --n-max 6") != 0) return false;
    for (int k = 0; k <= 4; ++k)
        if (run_cli("verify all --n-max 4 --corrupt-g " + std::to_string(k)) != 1) return false;
    return true;
}

}  // namespace

int main() {
    criterion(1, "ladder relations, number operator and basis-action table, exact, n = 1..8",
              criterion1());
    criterion(2, "moment tables: recurrence equals closed form for n = 1..12 plus pinned low orders",
              criterion2());
    criterion(3, "resolution of identity with the trivial weight for unit ladders, exact, n = 1..8",
              criterion3());
    criterion(4, "normalization coefficients equal a Newton-inverse series oracle (unit + 50 random "
                 "parameter sets per n in 2..6) and the closed forms at 20 random parameter sets",
              criterion4());
    criterion(5, "solved weight tables equal an independent moment solve, close the resolution for "
                 "n = 1..6, reduce correctly at unit parameters, and match the third-order closed "
                 "forms at random rational parameters",
              criterion5());
    criterion(6, "right-state eigenproperties and the two-generator overlap, exact, n = 1..4",
              criterion6());
    criterion(7, "left-state eigen-relation, norm form, shared normalization and resolution, "
                 "n = 1..5, with measured power signs",
              criterion7());
    criterion(8, "displacement operators unitary with resolving weights for n = 2..6, both variants; "
                 "second-order references exact, third-order compared entry by entry",
              criterion8());
    criterion(9, "polynomial form and diagonal relation at 100 random parameter sets per n in 2..6 "
                 "(exact) and spin presets under the float backend at 1e-10",
              criterion9());
    criterion(10, "command-line verification exits 0 on a correct build and 1 under any single "
                  "moment-table corruption",
              criterion10());

    std::printf("%d/10 criteria passed\n", 10 - failed_criteria);
    return failed_criteria == 0 ? 0 : 1;
}
