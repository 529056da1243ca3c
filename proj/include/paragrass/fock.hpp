#pragma once

#include <cmath>
#include <vector>

#include "paragrass/element.hpp"
#include "paragrass/report.hpp"

namespace paragrass {

// Ladder data on the (n+1)-dimensional number basis: the subdiagonal matrix
// elements alpha_0..alpha_{n-1} of the annihilator A = sum alpha_k |k><k+1|.
// alpha = (1,...,1) recovers the plain shift ladder.
template <class C>
struct LadderSpec {
    int n = 1;
    std::vector<C> alpha;

    static LadderSpec unit(int n) {
        return LadderSpec{n, std::vector<C>(static_cast<size_t>(n), scalar_traits<C>::one())};
    }

    void validate() const {
        check_degree<C>(n);
        if (static_cast<int>(alpha.size()) != n)
            throw std::invalid_argument("ladder spec needs exactly n matrix elements");
        for (const C& a : alpha)
            if (scalar_traits<C>::is_zero(a))
                throw std::invalid_argument("ladder matrix elements must be nonzero");
    }

    // Product alpha_0 * ... * alpha_{k-1} (empty product for k = 0).
    C alpha_factorial(int k) const {
        C p = scalar_traits<C>::one();
        for (int i = 0; i < k; ++i) p = p * alpha[static_cast<size_t>(i)];
        return p;
    }
    // F_k = |alpha_0|^2 ... |alpha_{k-1}|^2.
    C modulus_factorial(int k) const {
        C f = alpha_factorial(k);
        return f * scalar_traits<C>::conj(f);
    }
};

// Spin-(j) preset: n = 2j, alpha_k = sqrt((k+1)(2j-k)).  Irrational entries,
// hence float-backend only.
inline LadderSpec<Complex64> spin_ladder_spec(double j) {
    double two_j = 2.0 * j;
    int n = static_cast<int>(std::lround(two_j));
    if (n < 1 || std::abs(two_j - n) > 1e-12)
        throw std::invalid_argument("spin preset needs half-integer j >= 1/2");
    LadderSpec<Complex64> spec{n, {}};
    for (int k = 0; k < n; ++k)
        spec.alpha.push_back(std::sqrt(double(k + 1) * (two_j - k)));
    return spec;
}

template <class C>
Matrix<C> annihilator_matrix(const LadderSpec<C>& spec) {
    spec.validate();
    Matrix<C> a(spec.n + 1, spec.n + 1);
    for (int k = 0; k < spec.n; ++k) a(k, k + 1) = spec.alpha[static_cast<size_t>(k)];
    return a;
}
template <class C>
Matrix<C> annihilator_matrix(int n) {
    return annihilator_matrix(LadderSpec<C>::unit(n));
}

// Annihilator as an operator-payload element (unit ladder by default).
template <class C>
Element<C> annihilator(int n, int generators = 1) {
    return Element<C>::from_operator(n, annihilator_matrix<C>(n), generators);
}
template <class C>
Element<C> ladder_operator(const LadderSpec<C>& spec, int generators = 1) {
    return Element<C>::from_operator(spec.n, annihilator_matrix(spec), generators);
}

// N = sum_{m=1..n} A+^m A^m = diag(0,1,...,n) for the unit ladder.
template <class C>
Matrix<C> number_operator_matrix(int n) {
    check_degree<C>(n);
    Matrix<C> num(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) num(k, k) = scalar_traits<C>::from_rational(make_rational(k));
    return num;
}
template <class C>
Element<C> number_operator(int n, int generators = 1) {
    return Element<C>::from_operator(n, number_operator_matrix<C>(n), generators);
}

// H = A+ A: diagonal of squared moduli, the natural "energy" readout.
template <class C>
Matrix<C> ladder_hamiltonian(const LadderSpec<C>& spec) {
    Matrix<C> a = annihilator_matrix(spec);
    return a.conjugate_transpose() * a;
}

// Closure relation check A A+ + A+^n A^n = 1 plus the number-operator
// algebra, all as exact matrix identities on the unit ladder.
template <class C>
Report verify_core_relations(int n) {
    check_degree<C>(n);
    Report rep;
    const std::string scope = "core";
    Matrix<C> a = annihilator_matrix<C>(n);
    Matrix<C> ad = a.conjugate_transpose();
    Matrix<C> id = Matrix<C>::identity(n + 1);

    auto power = [&](const Matrix<C>& m, int k) {
        Matrix<C> p = Matrix<C>::identity(n + 1);
        for (int i = 0; i < k; ++i) p = p * m;
        return p;
    };

    rep.add(scope, "ladder-closure", n, "", a * ad + power(ad, n) * power(a, n) == id,
            "A A+ + A+^n A^n != 1");

    // N as the ordered sum, its action, and its square.
    Matrix<C> num_sum(n + 1, n + 1);
    Matrix<C> num_sq_sum(n + 1, n + 1);
    for (int m = 1; m <= n; ++m) {
        Matrix<C> t = power(ad, m) * power(a, m);
        num_sum = num_sum + t;
        num_sq_sum = num_sq_sum + scalar_traits<C>::from_rational(make_rational(2 * m - 1)) * t;
    }
    Matrix<C> num = number_operator_matrix<C>(n);
    rep.add(scope, "number-operator-sum", n, "", num_sum == num, "sum A+^m A^m != diag(0..n)");
    Matrix<C> num_sq = num * num;
    rep.add(scope, "number-operator-square", n, "", num_sq_sum == num_sq,
            "sum (2m-1) A+^m A^m != N^2");
    rep.add(scope, "number-commutator", n, "", a * num - num * a == a, "[A,N] != A");
    rep.add(scope, "number-commutator-adjoint", n, "", ad * num - num * ad == -ad, "[A+,N] != -A+");

    // A^i A+^k acting on the vacuum: |k-i> when i <= k, zero otherwise.
    bool vacuum_ok = true;
    Matrix<C> vac(n + 1, 1);
    vac(0, 0) = scalar_traits<C>::one();
    for (int i = 0; i <= n && vacuum_ok; ++i)
        for (int k = 0; k <= n && vacuum_ok; ++k) {
            Matrix<C> got = power(a, i) * (power(ad, k) * vac);
            Matrix<C> want(n + 1, 1);
            if (i <= k) want(k - i, 0) = scalar_traits<C>::one();
            if (got != want) vacuum_ok = false;
        }
    rep.add(scope, "vacuum-ladder-table", n, "", vacuum_ok, "A^i A+^k |0> table mismatch");
    return rep;
}

// Expansion of a general ladder over the unit one:
//   A(alpha) = alpha_0 A + sum_{m=2..n} (alpha_{m-1} - alpha_{m-2}) A+^(m-1) A^m.
// Returns the n coefficients (alpha_0, alpha_1-alpha_0, ...) after verifying
// the identity as exact matrices.
template <class C>
std::vector<C> polynomial_form(const LadderSpec<C>& spec) {
    spec.validate();
    const int n = spec.n;
    Matrix<C> a = annihilator_matrix<C>(n);
    Matrix<C> ad = a.conjugate_transpose();
    std::vector<C> coeffs;
    coeffs.push_back(spec.alpha[0]);
    for (int m = 2; m <= n; ++m)
        coeffs.push_back(spec.alpha[static_cast<size_t>(m - 1)] - spec.alpha[static_cast<size_t>(m - 2)]);

    Matrix<C> sum = coeffs[0] * a;
    Matrix<C> a_pow = a;           // A^m
    Matrix<C> ad_pow = Matrix<C>::identity(n + 1);  // A+^(m-1)
    for (int m = 2; m <= n; ++m) {
        a_pow = a_pow * a;
        ad_pow = ad_pow * ad;
        sum = sum + coeffs[static_cast<size_t>(m - 1)] * (ad_pow * a_pow);
    }
    if (sum != annihilator_matrix(spec))
        throw std::logic_error("polynomial form failed to reproduce the ladder matrix");
    return coeffs;
}

// A(alpha) A+(alpha) + A+(alpha)^n A(alpha)^n, which must come out diagonal:
// (|alpha_0|^2, ..., |alpha_{n-1}|^2, F_n).  Returns the diagonal.
template <class C>
std::vector<C> diag_relation(const LadderSpec<C>& spec) {
    spec.validate();
    const int n = spec.n;
    Matrix<C> a = annihilator_matrix(spec);
    Matrix<C> ad = a.conjugate_transpose();
    Matrix<C> a_pow = Matrix<C>::identity(n + 1);
    Matrix<C> ad_pow = Matrix<C>::identity(n + 1);
    for (int i = 0; i < n; ++i) {
        a_pow = a_pow * a;
        ad_pow = ad_pow * ad;
    }
    Matrix<C> lhs = a * ad + ad_pow * a_pow;

    std::vector<C> expected_diag;
    for (int k = 0; k < n; ++k) {
        const C& al = spec.alpha[static_cast<size_t>(k)];
        expected_diag.push_back(al * scalar_traits<C>::conj(al));
    }
    expected_diag.push_back(spec.modulus_factorial(n));

    Matrix<C> expected(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) expected(k, k) = expected_diag[static_cast<size_t>(k)];
    if (lhs != expected) throw std::logic_error("ladder closure did not reduce to the expected diagonal");
    return expected_diag;
}

}  // namespace paragrass
