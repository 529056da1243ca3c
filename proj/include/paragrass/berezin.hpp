#pragma once

#include <vector>

#include "paragrass/element.hpp"

namespace paragrass {

// Weights of the order-n generalized Berezin integral: the functional is
// defined on normal-ordered monomials by
//
//   I[ z^i z*^k ] = delta_{ik} g_k,
//
// extended linearly with payloads carried along.  Reversed-order inputs pick
// up the usual reordering sign before the table applies.
struct GTable {
    int n = 1;
    std::vector<long> g;  // g[0..n]

    long at(int k) const { return g.at(static_cast<size_t>(k)); }
};

// Downward recurrence g_n = 1, g_k = 1 + (-1)^(k+1) g_{k+1}.
GTable g_recurrence(int n);

// Closed form g_k = 1 + sum_{i=1..n-k} (-1)^(k i + i(i+1)/2).
GTable g_closed(int n);

// Integrates an element depending on a single generator pair; returns the
// accumulated payload (a 1x1 matrix for scalar-kind input).  The element may
// live in a multi-generator algebra as long as only one generator actually
// appears; the integral is taken over that generator.
template <class C>
Matrix<C> integrate(const Element<C>& x, const GTable& table) {
    if (x.degree() != table.n) throw std::domain_error("g-table degree does not match element");
    int used = -1;
    for (const auto& [m, p] : x.terms())
        for (int g = 0; g < m.generators(); ++g)
            if (m.unstarred(g) != 0 || m.starred(g) != 0) {
                if (used == -1) used = g;
                else if (used != g)
                    throw std::invalid_argument("integrate: element depends on more than one generator");
            }
    if (used == -1) used = 0;

    auto [rows, cols] = [&x]() -> std::pair<int, int> {
        switch (x.kind()) {
            case PayloadKind::Scalar: return {1, 1};
            case PayloadKind::Operator: return {x.degree() + 1, x.degree() + 1};
            case PayloadKind::Ket: return {x.degree() + 1, 1};
            case PayloadKind::Bra: return {1, x.degree() + 1};
        }
        return {1, 1};
    }();
    Matrix<C> acc(rows, cols);
    for (const auto& [m, p] : x.terms()) {
        int i = m.unstarred(used), k = m.starred(used);
        if (i != k) continue;
        acc = acc + scalar_traits<C>::from_rational(make_rational(table.at(k))) * p;
    }
    return acc;
}

}  // namespace paragrass
