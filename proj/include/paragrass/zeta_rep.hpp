#pragma once

#include "paragrass/matrix.hpp"

namespace paragrass {

// A concrete (n+1)x(n+1) matrix pair realizing the generator relations:
// first-subdiagonal entries alternate 1, -i, 1, ... for the unstarred
// matrix, with the starred one its entrywise conjugate.  For n = 1 the
// alternation degenerates to the standard 2x2 nilpotent pair.  These
// matrices serve as a relation-checking oracle only; the abstract algebra
// remains authoritative for everything else.
template <class C>
struct ZetaMatrixPair {
    Matrix<C> unstarred;
    Matrix<C> starred;
    bool anticommutator_vanishes = false;
    bool unstarred_nilpotent = false;
    bool starred_nilpotent = false;

    bool all_relations_hold() const {
        return anticommutator_vanishes && unstarred_nilpotent && starred_nilpotent;
    }
};

template <class C>
ZetaMatrixPair<C> zeta_matrix_rep(int n) {
    check_degree<C>(n);
    ZetaMatrixPair<C> rep{Matrix<C>(n + 1, n + 1), Matrix<C>(n + 1, n + 1)};
    const C one = scalar_traits<C>::one();
    const C minus_i = -scalar_traits<C>::i();
    for (int k = 0; k + 1 <= n; ++k) {
        C entry = (k % 2 == 0) ? one : minus_i;
        rep.unstarred(k + 1, k) = entry;
        rep.starred(k + 1, k) = scalar_traits<C>::conj(entry);
    }

    Matrix<C> anti = rep.unstarred * rep.starred + rep.starred * rep.unstarred;
    rep.anticommutator_vanishes = anti.is_zero();

    auto nilpotent = [n](const Matrix<C>& m) {
        Matrix<C> p = Matrix<C>::identity(n + 1);
        for (int i = 0; i <= n; ++i) p = p * m;
        return p.is_zero();
    };
    rep.unstarred_nilpotent = nilpotent(rep.unstarred);
    rep.starred_nilpotent = nilpotent(rep.starred);
    return rep;
}

}  // namespace paragrass
