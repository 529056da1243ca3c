#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include <paragrass/element.hpp>
#include <paragrass/series.hpp>
#include <paragrass/zeta_rep.hpp>

#include "naive_algebra.hpp"

using namespace paragrass;
using C = GaussianRational;

namespace {

C q(long num, long den = 1) { return C(make_rational(num, den)); }

Element<C> zeta(int n, int gen = 0, int generators = 1) {
    return Element<C>::generator_power(n, gen, false, 1, generators);
}
Element<C> zeta_star(int n, int gen = 0, int generators = 1) {
    return Element<C>::generator_power(n, gen, true, 1, generators);
}

}  // namespace

TEST_CASE("monomials_order_blocks_and_multiply_exponentwise") {
    Monomial z = Monomial::power(1, 0, false, 2);
    Monomial zs = Monomial::power(1, 0, true, 3);
    Monomial prod = z * zs;
    CHECK(prod.unstarred(0) == 2);
    CHECK(prod.starred(0) == 3);
    CHECK(prod.total_degree() == 5);
    CHECK(prod.within_degree(3));
    CHECK_FALSE(prod.within_degree(2));
    Monomial adj = prod.adjoint();
    CHECK(adj.unstarred(0) == 3);
    CHECK(adj.starred(0) == 2);
    CHECK(Monomial::one(2).is_one());
    CHECK_THROWS_AS(Monomial::power(1, 1, false, 1), std::invalid_argument);
}

TEST_CASE("opposite_star_types_anticommute_same_types_commute") {
    for (int n = 1; n <= 4; ++n) {
        Element<C> z = zeta(n), zs = zeta_star(n);
        CHECK(z * zs + zs * z == Element<C>::zero(n, PayloadKind::Scalar));

        Element<C> z0 = zeta(n, 0, 2), z1 = zeta(n, 1, 2), z1s = zeta_star(n, 1, 2);
        CHECK(z0 * z1 == z1 * z0);
        CHECK(z0 * z1s + z1s * z0 == Element<C>::zero(n, PayloadKind::Scalar, 2));
    }
}

TEST_CASE("generators_are_nilpotent_of_order_n_plus_one") {
    for (int n = 1; n <= 5; ++n) {
        Element<C> z = zeta(n);
        CHECK_FALSE(z.pow(n) == Element<C>::zero(n, PayloadKind::Scalar));
        CHECK(z.pow(n + 1) == Element<C>::zero(n, PayloadKind::Scalar));
        CHECK(zeta_star(n).pow(n + 1) == Element<C>::zero(n, PayloadKind::Scalar));
    }
}

TEST_CASE("reorder_sign_counts_opposite_type_crossings") {
    const int n = 3;
    Element<C> z = zeta(n), zs = zeta_star(n);
    // one crossing: zs z = - z zs
    CHECK(zs * z == -(z * zs));
    // six crossings: zs^2 z^3 = + z^3 zs^2
    CHECK(zs.pow(2) * z.pow(3) == z.pow(3) * zs.pow(2));
    // three crossings: zs^3 z = - z zs^3
    CHECK(zs.pow(3) * z == -(z * zs.pow(3)));
}

TEST_CASE("generator_letters_cross_kets_with_basis_parity") {
    for (int n = 1; n <= 4; ++n) {
        Element<C> z = zeta(n);
        for (int k = 0; k <= n; ++k) {
            Element<C> ket = Element<C>::basis_ket(n, k);
            Element<C> moved = ket * z;
            Element<C> expected = z * ket;
            if (k % 2 != 0) expected = -expected;
            CHECK(moved == expected);
        }
    }
}

TEST_CASE("adjoint_is_an_antihomomorphism") {
    std::mt19937 rng(7);
    for (int n = 2; n <= 3; ++n)
        for (int rep = 0; rep < 30; ++rep) {
            Element<C> x = naive::random_element<C>(n, 1, PayloadKind::Operator, rng);
            Element<C> y = naive::random_element<C>(n, 1, PayloadKind::Operator, rng);
            CHECK((x * y).adjoint() == y.adjoint() * x.adjoint());
            CHECK(x.adjoint().adjoint() == x);
        }
}

TEST_CASE("product_is_associative") {
    std::mt19937 rng(11);
    for (int n = 2; n <= 4; ++n)
        for (int rep = 0; rep < 40; ++rep) {
            Element<C> x = naive::random_element<C>(n, 1, PayloadKind::Operator, rng, 3);
            Element<C> y = naive::random_element<C>(n, 1, PayloadKind::Operator, rng, 3);
            Element<C> z = naive::random_element<C>(n, 1, PayloadKind::Operator, rng, 3);
            CHECK((x * y) * z == x * (y * z));
        }
}

TEST_CASE("engine_product_matches_transposition_oracle") {
    std::mt19937 rng(23);
    for (int n = 1; n <= 4; ++n)
        for (int generators = 1; generators <= 2; ++generators)
            for (int rep = 0; rep < 25; ++rep) {
                Element<C> x = naive::random_element<C>(n, generators, PayloadKind::Operator, rng, 3);
                Element<C> y = naive::random_element<C>(n, generators, PayloadKind::Operator, rng, 3);
                naive::NaiveElement<C> oracle =
                    naive::multiply(naive::from_engine(x), naive::from_engine(y));
                CHECK(naive::equal(naive::from_engine(x * y), oracle));
            }
}

TEST_CASE("engine_product_matches_oracle_across_payload_kinds") {
    std::mt19937 rng(31);
    const int n = 3;
    for (int rep = 0; rep < 25; ++rep) {
        Element<C> op = naive::random_element<C>(n, 1, PayloadKind::Operator, rng, 3);
        Element<C> ket = naive::random_element<C>(n, 1, PayloadKind::Ket, rng, 3);
        Element<C> bra = naive::random_element<C>(n, 1, PayloadKind::Bra, rng, 3);
        Element<C> sc = naive::random_element<C>(n, 1, PayloadKind::Scalar, rng, 3);
        auto agree = [](const Element<C>& engine, const Element<C>& a, const Element<C>& b) {
            return naive::equal(naive::from_engine(engine),
                                naive::multiply(naive::from_engine(a), naive::from_engine(b)));
        };
        CHECK(agree(op * ket, op, ket));
        CHECK(agree(bra * op, bra, op));
        CHECK(agree(bra * ket, bra, ket));
        CHECK(agree(ket * bra, ket, bra));
        CHECK(agree(sc * ket, sc, ket));
        CHECK(agree(ket * sc, ket, sc));
    }
}

TEST_CASE("payload_kind_composition_is_guarded") {
    const int n = 2;
    Element<C> ket = Element<C>::basis_ket(n, 0);
    Element<C> bra = Element<C>::basis_bra(n, 0);
    Element<C> op = Element<C>::identity_operator(n);
    CHECK((ket * bra).kind() == PayloadKind::Operator);
    CHECK((bra * ket).kind() == PayloadKind::Scalar);
    CHECK_THROWS_AS(ket * ket, std::domain_error);
    CHECK_THROWS_AS(ket * op, std::domain_error);
    CHECK_THROWS_AS(op * bra, std::domain_error);
    CHECK_THROWS_AS(ket + bra, std::domain_error);
}

TEST_CASE("series_identities_hold_on_nilpotent_arguments") {
    for (int n = 1; n <= 4; ++n) {
        Element<C> u = zeta_star(n) * zeta(n);
        Element<C> one = Element<C>::one(n);

        Element<C> root = series_apply(RationalSeries::sqrt_one_plus(), u);
        CHECK(root * root == one + u);

        Element<C> inv = series_apply(RationalSeries::inv_one_plus(), u);
        CHECK(inv * (one + u) == one);

        Element<C> inv_root = series_apply(RationalSeries::inv_sqrt_one_plus(), u);
        CHECK(inv_root * inv_root * (one + u) == one);

        CHECK(exp_nilpotent(u) * exp_nilpotent(-u) == one);
    }
}

TEST_CASE("series_reject_constant_terms_and_vector_payloads") {
    CHECK_THROWS_AS(exp_nilpotent(Element<C>::one(2)), std::invalid_argument);
    CHECK_THROWS_AS(series_apply(RationalSeries::sqrt_one_plus(), Element<C>::basis_ket(2, 0)),
                    std::invalid_argument);
}

TEST_CASE("engine_exponential_matches_series_oracle") {
    std::mt19937 rng(41);
    for (int n = 2; n <= 3; ++n)
        for (int rep = 0; rep < 10; ++rep) {
            Element<C> base = naive::random_element<C>(n, 1, PayloadKind::Operator, rng, 2);
            // strip the constant term so the argument is nilpotent
            Element<C> x = (zeta(n) * base) + (zeta_star(n) * base.adjoint());
            Element<C> engine = exp_nilpotent(x);
            naive::NaiveElement<C> oracle = naive::exp_oracle(naive::from_engine(x), n + 1);
            CHECK(naive::equal(naive::from_engine(engine), oracle));
        }
}

TEST_CASE("matrix_realization_satisfies_generator_relations") {
    for (int n = 1; n <= 8; ++n) {
        ZetaMatrixPair<C> rep = zeta_matrix_rep<C>(n);
        CHECK(rep.anticommutator_vanishes);
        CHECK(rep.unstarred_nilpotent);
        CHECK(rep.starred_nilpotent);
        for (int k = 0; k + 1 <= n; ++k)
            CHECK(rep.starred(k + 1, k) == scalar_traits<C>::conj(rep.unstarred(k + 1, k)));
    }
}

TEST_CASE("scalar_backend_arithmetic_and_guards") {
    C a = q(3, 4) + scalar_traits<C>::i() * q(-2, 5);
    CHECK(scalar_traits<C>::conj(a) * a == a * scalar_traits<C>::conj(a));
    CHECK(a / a == scalar_traits<C>::one());
    CHECK_THROWS_AS(a / scalar_traits<C>::zero(), std::domain_error);
    CHECK(parse_rational("-22/7").has_value());
    CHECK_FALSE(parse_rational("3/0").has_value());
    CHECK_FALSE(parse_rational("x").has_value());
    CHECK_THROWS_AS(check_degree<C>(scalar_traits<C>::degree_cap() + 1), std::invalid_argument);
}

TEST_CASE("elements_of_mismatched_algebras_do_not_mix") {
    CHECK_THROWS_AS(zeta(2) * zeta(3), std::domain_error);
    CHECK_THROWS_AS(zeta(2) + zeta(2, 0, 2), std::domain_error);
}
