#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check.

#include "hulltop/dyadic.hpp"
#include "hulltop/hull.hpp"
#include "hulltop/monoid.hpp"
#include "hulltop/pseudonorm.hpp"

namespace hulltop::oracles {

// Least q on the grid 1/2^K (with whole parts up to 2) whose level set
// contains e, computing every level set literally from the digits of q over
// the tail-extended string; no saturation shortcut. As K grows this
// decreases to the exact infimum, so a claimed value v is confirmed by
// v <= result <= v + 1/2^K.
inline Dyadic infimum_scan(const MonoidPtr& m, const QString& s, std::uint32_t e, unsigned K) {
    for (std::uint64_t k = 1; k <= (std::uint64_t(2) << K); ++k) {
        Subset v = Subset::singleton(m->size(), m->zero());
        std::uint64_t whole = k >> K;
        for (std::uint64_t i = 0; i < whole; ++i) v = m->set_sum(v, s.at(0));
        for (unsigned i = 1; i <= K; ++i)
            if ((k >> (K - i)) & 1u) v = m->set_sum(v, s.at(i));
        if (v.test(e)) return Dyadic::make(k, K);
    }
    return Dyadic::top();
}

// Confirms that value equals the exact infimum (clipped at 1) by bracketing
// it with the scan at grid exponent K.
inline bool confirms_value(const MonoidPtr& m, const QString& s, std::uint32_t e, const Dyadic& value,
                           unsigned K) {
    Dyadic scan = infimum_scan(m, s, e, K);
    if (scan.is_top() || Dyadic::one() < scan) return value == Dyadic::one();
    return value <= scan && scan <= value + Dyadic::pow2(K);
}

// Pointwise maximum of every grid-valued lower H-continuous minorant of f;
// grid.size()^carrier enumeration.
inline GradedFunction lower_regularize_scan(const HullStructure& h, const GradedFunction& f,
                                            const std::vector<Dyadic>& grid) {
    std::uint32_t n = f.size();
    GradedFunction best;
    best.values.assign(n, Dyadic::zero());
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        GradedFunction cand;
        cand.values.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i) cand.values.push_back(grid[idx[i]]);
        bool below = true;
        for (std::uint32_t i = 0; i < n && below; ++i) below = !(f.values[i] < cand.values[i]);
        if (below && is_lower_continuous(h, cand).holds)
            for (std::uint32_t i = 0; i < n; ++i) best.values[i] = max(best.values[i], cand.values[i]);
        std::uint32_t i = 0;
        while (i < n) {
            if (++idx[i] < grid.size()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return best;
}

} // namespace hulltop::oracles
