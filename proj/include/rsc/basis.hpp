#pragma once

#include <set>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "root_system.hpp"

namespace rsc {

/// Basis of the W-invariant Laurent polynomials of bounded radius: one orbit
/// sum m_lambda per partition with largest part <= d.  Distinct leading
/// monomials make linear independence immediate.
struct InvariantBasis {
    int n = 0;
    int d = 0;
    std::vector<ExpVec> partitions;   // lex-sorted, weakly decreasing entries
    std::vector<LaurentPoly> elems;   // elems[i] = orbit sum of partitions[i]

    size_t size() const { return elems.size(); }
};

/// m_lambda = sum of X^mu over the signed-permutation orbit of lambda.
inline LaurentPoly orbit_sum(int n, const ExpVec& lambda) {
    std::set<ExpVec> orbit;
    for (const auto& w : enumerate_weyl(n)) orbit.insert(w.act(lambda));
    LaurentPoly m(n);
    for (const auto& mu : orbit) m.add_term(mu, FieldScalar::one());
    return m;
}

inline void partitions_rec(std::vector<ExpVec>& out, ExpVec& cur, int pos, int maxpart) {
    if (pos == static_cast<int>(cur.size())) {
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= maxpart; ++v) {
        cur[static_cast<size_t>(pos)] = v;
        partitions_rec(out, cur, pos + 1, v);
    }
    cur[static_cast<size_t>(pos)] = 0;
}

inline InvariantBasis invariant_basis(int n, int d) {
    if (d < 0) throw std::logic_error("invariant_basis: d >= 0 required");
    InvariantBasis b;
    b.n = n;
    b.d = d;
    ExpVec cur = zero_exp(n);
    partitions_rec(b.partitions, cur, 0, d);
    std::sort(b.partitions.begin(), b.partitions.end());
    for (const auto& lam : b.partitions) b.elems.push_back(orbit_sum(n, lam));
    return b;
}

} // namespace rsc
