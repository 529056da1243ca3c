#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "paragrass/matrix.hpp"
#include "paragrass/monomial.hpp"

namespace paragrass {

enum class PayloadKind { Scalar, Operator, Ket, Bra };

inline std::string payload_kind_name(PayloadKind k) {
    switch (k) {
        case PayloadKind::Scalar: return "scalar";
        case PayloadKind::Operator: return "operator";
        case PayloadKind::Ket: return "ket";
        case PayloadKind::Bra: return "bra";
    }
    return "?";
}

// Which payload kinds compose under multiplication, and into what.  A plain
// scalar composes with anything from either side; ket.bra is the outer
// product and yields an operator.  The remaining combinations (ket.ket,
// ket.operator, ...) have no meaning and are rejected.
inline PayloadKind compose_kinds(PayloadKind a, PayloadKind b) {
    using K = PayloadKind;
    if (a == K::Scalar) return b;
    if (b == K::Scalar) return a;
    if (a == K::Operator && b == K::Operator) return K::Operator;
    if (a == K::Operator && b == K::Ket) return K::Ket;
    if (a == K::Bra && b == K::Operator) return K::Bra;
    if (a == K::Bra && b == K::Ket) return K::Scalar;
    if (a == K::Ket && b == K::Bra) return K::Operator;
    throw std::domain_error("cannot compose " + payload_kind_name(a) + " . " + payload_kind_name(b) +
                            " payloads");
}

// An element of the algebra: a finite sum of normal-ordered monomials, each
// carrying a payload (matrix / ket / bra / scalar) standing to its right.
// The generators satisfy
//
//   z_g^(n+1) = 0,   z z' = z' z,  z* z'* = z'* z*,   z z'* = -z'* z
//
// (same-type generators commute, opposite types anticommute regardless of
// index), and crossing a payload from one side to the other conjugates the
// payload by the parity matrix P = diag((-1)^k) once per generator letter.
template <class C>
class Element {
  public:
    using Payload = Matrix<C>;
    using Terms = std::map<Monomial, Payload>;

    Element(int n, int generators, PayloadKind kind)
        : n_(n), generators_(generators), kind_(kind) {
        check_degree<C>(n);
        if (generators < 1) throw std::invalid_argument("generator count must be >= 1");
    }

    // --- factories -------------------------------------------------------

    static Element zero(int n, PayloadKind kind, int generators = 1) {
        return Element(n, generators, kind);
    }
    static Element scalar(int n, const C& value, int generators = 1) {
        Element e(n, generators, PayloadKind::Scalar);
        e.add_term(Monomial::one(generators), Payload::scalar(value));
        return e;
    }
    static Element one(int n, int generators = 1) { return scalar(n, scalar_traits<C>::one(), generators); }
    static Element identity_operator(int n, int generators = 1) {
        Element e(n, generators, PayloadKind::Operator);
        e.add_term(Monomial::one(generators), Payload::identity(n + 1));
        return e;
    }
    static Element from_operator(int n, const Matrix<C>& op, int generators = 1) {
        Element e(n, generators, PayloadKind::Operator);
        if (op.rows() != n + 1 || op.cols() != n + 1) throw std::invalid_argument("operator payload shape");
        e.add_term(Monomial::one(generators), op);
        return e;
    }
    static Element basis_ket(int n, int k, int generators = 1) {
        if (k < 0 || k > n) throw std::invalid_argument("basis index out of range");
        Element e(n, generators, PayloadKind::Ket);
        Payload v(n + 1, 1);
        v(k, 0) = scalar_traits<C>::one();
        e.add_term(Monomial::one(generators), v);
        return e;
    }
    static Element basis_bra(int n, int k, int generators = 1) {
        if (k < 0 || k > n) throw std::invalid_argument("basis index out of range");
        Element e(n, generators, PayloadKind::Bra);
        Payload v(1, n + 1);
        v(0, k) = scalar_traits<C>::one();
        e.add_term(Monomial::one(generators), v);
        return e;
    }
    // The generator z_g (or z_g*) to a power, as a scalar-payload element.
    static Element generator_power(int n, int gen, bool starred, int exponent, int generators = 1) {
        Element e(n, generators, PayloadKind::Scalar);
        if (exponent > n) return e;  // nilpotent: the power vanishes
        e.add_term(Monomial::power(generators, gen, starred, exponent),
                   Payload::scalar(scalar_traits<C>::one()));
        return e;
    }

    // --- inspection ------------------------------------------------------

    int degree() const { return n_; }
    int generators() const { return generators_; }
    PayloadKind kind() const { return kind_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const Payload* find(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? nullptr : &it->second;
    }
    // Coefficient of a monomial as a payload; zero payload when absent.
    Payload coefficient(const Monomial& m) const {
        if (const Payload* p = find(m)) return *p;
        auto [r, c] = payload_shape();
        return Payload(r, c);
    }

    void add_term(const Monomial& m, const Payload& p) {
        if (m.generators() != generators_) throw std::domain_error("monomial generator count mismatch");
        auto [r, c] = payload_shape();
        if (p.rows() != r || p.cols() != c) throw std::domain_error("payload shape does not match kind");
        if (!m.within_degree(n_)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!p.is_zero()) terms_.emplace(m, p);
        } else {
            it->second = it->second + p;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // --- ring operations -------------------------------------------------

    friend Element operator+(const Element& a, const Element& b) {
        a.check_compatible(b);
        if (a.kind_ != b.kind_) throw std::domain_error("adding elements of different payload kinds");
        Element r = a;
        for (const auto& [m, p] : b.terms_) r.add_term(m, p);
        return r;
    }
    friend Element operator-(const Element& a, const Element& b) { return a + (-b); }
    Element operator-() const {
        Element r = *this;
        for (auto& [m, p] : r.terms_) p = -p;
        return r;
    }
    friend Element operator*(const C& s, const Element& a) {
        Element r(a.n_, a.generators_, a.kind_);
        for (const auto& [m, p] : a.terms_) r.add_term(m, s * p);
        return r;
    }

    // The twisted product.  Per term (m1 (x) C1) . (m2 (x) C2):
    //   * reordering m2's unstarred block past m1's starred block costs
    //     (-1)^(starred(m1) * unstarred(m2)); all other block moves are free,
    //   * m2 crosses C1 on the way left, conjugating it by parity once per
    //     letter, i.e. only the parity of m2's total degree matters,
    //   * any exponent beyond n kills the term.
    friend Element operator*(const Element& a, const Element& b) {
        a.check_compatible(b);
        PayloadKind kind = compose_kinds(a.kind_, b.kind_);
        Element r(a.n_, a.generators_, kind);
        for (const auto& [m1, p1] : a.terms_) {
            const int s1 = m1.starred_degree();
            for (const auto& [m2, p2] : b.terms_) {
                Monomial m = m1 * m2;
                if (!m.within_degree(a.n_)) continue;
                bool negate = (s1 * m2.unstarred_degree()) % 2 != 0;
                Payload crossed = (m2.total_degree() % 2 != 0) ? p1.parity_conjugate() : p1;
                Payload prod = compose_payload(crossed, a.kind_, p2, b.kind_);
                r.add_term(m, negate ? -prod : prod);
            }
        }
        return r;
    }

    Element pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative element power");
        Element r = (kind_ == PayloadKind::Operator) ? identity_operator(n_, generators_)
                                                     : one(n_, generators_);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    // (m (x) C)+  =  C+ m+  =  m+ (x) P^deg (C+) P^deg   in normal order.
    Element adjoint() const {
        PayloadKind kind = kind_;
        if (kind == PayloadKind::Ket) kind = PayloadKind::Bra;
        else if (kind == PayloadKind::Bra) kind = PayloadKind::Ket;
        Element r(n_, generators_, kind);
        for (const auto& [m, p] : terms_) {
            Payload q = p.conjugate_transpose();
            if (m.total_degree() % 2 != 0) q = q.parity_conjugate();
            r.add_term(m.adjoint(), q);
        }
        return r;
    }

    friend bool operator==(const Element& a, const Element& b) {
        if (a.n_ != b.n_ || a.generators_ != b.generators_ || a.kind_ != b.kind_) return false;
        if constexpr (scalar_traits<C>::is_exact) {
            return a.terms_ == b.terms_;
        } else {
            return (a - b).is_zero();  // tolerance-aware via pruning
        }
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    // Scalar-kind elements built from the coefficient of basis ket k (for
    // component-wise inspection of states).
    Element component(int k) const {
        if (kind_ != PayloadKind::Ket) throw std::domain_error("component() requires a ket element");
        Element r(n_, generators_, PayloadKind::Scalar);
        for (const auto& [m, p] : terms_) r.add_term(m, Payload::scalar(p(k, 0)));
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, p] : terms_) {
            if (!s.empty()) s += "  +  ";
            if (kind_ == PayloadKind::Scalar) {
                s += scalar_traits<C>::to_string(p(0, 0)) + " " + m.to_string();
            } else {
                s += m.to_string() + " (x) [";
                for (int i = 0; i < p.rows(); ++i)
                    for (int j = 0; j < p.cols(); ++j) {
                        s += scalar_traits<C>::to_string(p(i, j));
                        s += (j + 1 < p.cols()) ? "," : (i + 1 < p.rows() ? "; " : "");
                    }
                s += "]";
            }
        }
        return s;
    }

  private:
    std::pair<int, int> payload_shape() const {
        switch (kind_) {
            case PayloadKind::Scalar: return {1, 1};
            case PayloadKind::Operator: return {n_ + 1, n_ + 1};
            case PayloadKind::Ket: return {n_ + 1, 1};
            case PayloadKind::Bra: return {1, n_ + 1};
        }
        return {1, 1};
    }

    static Payload compose_payload(const Payload& p1, PayloadKind k1, const Payload& p2, PayloadKind k2) {
        if (k1 == PayloadKind::Scalar) return p1(0, 0) * p2;
        if (k2 == PayloadKind::Scalar) return p2(0, 0) * p1;
        return p1 * p2;  // operator/ket/bra combinations are plain matrix products
    }

    void check_compatible(const Element& b) const {
        if (n_ != b.n_) throw std::domain_error("elements live in algebras of different degree");
        if (generators_ != b.generators_) throw std::domain_error("elements use different generator sets");
    }

    int n_;
    int generators_;
    PayloadKind kind_;
    Terms terms_;
};

// Convenience aliases for the common single-generator case.
template <class C>
Element<C> zeta(int n, int gen = 0, int generators = 1) {
    return Element<C>::generator_power(n, gen, false, 1, generators);
}
template <class C>
Element<C> zeta_star(int n, int gen = 0, int generators = 1) {
    return Element<C>::generator_power(n, gen, true, 1, generators);
}

}  // namespace paragrass
