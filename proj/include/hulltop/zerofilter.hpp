#pragma once

#include <string>
#include <vector>

#include "hulltop/hull.hpp"
#include "hulltop/monoid.hpp"
#include "hulltop/pseudonorm.hpp"
#include "hulltop/subset.hpp"

namespace hulltop {

// The filter of neighborhoods of zero, given by a finite base. On a finite
// carrier the filter is exactly the family of supersets of base members, so
// the base is all that is stored. Invariants (checked at construction):
//   - every base set contains zero,
//   - downward directed: any two base sets contain a common base set,
//   - halving: for every U in the base some base V has V + V inside U.
class ZeroFilter {
public:
    ZeroFilter(MonoidPtr m, std::vector<Subset> base);

    const MonoidPtr& monoid() const { return monoid_; }
    const std::vector<Subset>& base() const { return base_; }

    // A is a filter member iff it contains a base set.
    bool member(const Subset& a) const;

private:
    MonoidPtr monoid_;
    std::vector<Subset> base_;
};

inline ZeroFilter make_zero_filter(MonoidPtr m, std::vector<Subset> base) {
    return ZeroFilter(std::move(m), std::move(base));
}

struct BoolWithWitness {
    bool holds = true;
    std::string witness;
    explicit operator bool() const { return holds; }
};

// F has a base of H-members iff inside every base set U there is a filter
// member that is a member of H and contains zero. Since the closure of a base
// set B is the smallest member containing B, this reduces to: some base B has
// cl(B) inside U.
BoolWithWitness is_Q_base(const ZeroFilter& f, const HullStructure& h);

// Finite-carrier form of "taking inverses is continuous": F has a base of
// symmetric sets.
bool is_group_filter(const ZeroFilter& f);

// Extracts an H-string subordinate to W from the filter: U_n is a member of H
// and of the filter, U_n is inside W_n, and U_n + U_n is inside U_{n-1}. W is
// implicitly extended by its last entry; the construction stabilizes on a
// finite carrier and the stabilized set is the tail.
QString refine_string(const ZeroFilter& f, const HullPtr& h, const std::vector<Subset>& w);

// Mutual refinement of the bases.
bool filter_equal(const ZeroFilter& f1, const ZeroFilter& f2);

// The filter generated by a finite family: base sets are intersections of one
// base set from each input filter.
ZeroFilter join_filters(const std::vector<ZeroFilter>& filters);

} // namespace hulltop
