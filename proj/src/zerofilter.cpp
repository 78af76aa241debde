#include "hulltop/zerofilter.hpp"

#include <algorithm>

#include "hulltop/error.hpp"

namespace hulltop {

ZeroFilter::ZeroFilter(MonoidPtr m, std::vector<Subset> base)
    : monoid_(std::move(m)), base_(std::move(base)) {
    const auto& M = *monoid_;
    if (base_.empty()) throw Error(Err::NotDirected, "empty filter base");
    for (const auto& u : base_) {
        if (u.carrier_size() != M.size()) throw Error(Err::NotDirected, "base carrier mismatch");
        if (!u.test(M.zero())) throw Error(Err::NotDirected, "base set misses zero: " + u.str());
    }
    for (std::size_t i = 0; i < base_.size(); ++i)
        for (std::size_t j = i + 1; j < base_.size(); ++j) {
            Subset meet = base_[i] & base_[j];
            bool ok = false;
            for (const auto& w : base_)
                if (w.subset_of(meet)) {
                    ok = true;
                    break;
                }
            if (!ok)
                throw Error(Err::NotDirected, "no base set inside " + base_[i].str() + " intersect " +
                                                  base_[j].str());
        }
    for (const auto& u : base_) {
        bool ok = false;
        for (const auto& v : base_)
            if (M.set_sum(v, v).subset_of(u)) {
                ok = true;
                break;
            }
        if (!ok) throw Error(Err::NoHalvingSet, "no base V with V+V inside " + u.str());
    }
}

bool ZeroFilter::member(const Subset& a) const {
    for (const auto& b : base_)
        if (b.subset_of(a)) return true;
    return false;
}

BoolWithWitness is_Q_base(const ZeroFilter& f, const HullStructure& h) {
    BoolWithWitness res;
    for (const auto& u : f.base()) {
        bool ok = false;
        for (const auto& b : f.base())
            if (h.close(b).subset_of(u)) {
                ok = true;
                break;
            }
        if (!ok) {
            res.holds = false;
            res.witness = "no member of " + h.name() + " in the filter inside " + u.str();
            return res;
        }
    }
    return res;
}

bool is_group_filter(const ZeroFilter& f) {
    if (!f.monoid()->is_group()) throw Error(Err::NotAGroup, f.monoid()->name() + " is not a group");
    auto sym = make_symmetric_sets(f.monoid());
    return is_Q_base(f, *sym).holds;
}

QString refine_string(const ZeroFilter& f, const HullPtr& h, const std::vector<Subset>& w) {
    const auto& M = *f.monoid();
    if (w.empty()) throw Error(Err::NotInFilter, "empty target sequence");
    if (!is_Q_base(f, *h))
        throw Error(Err::NotQBase, "filter has no base of members of " + h->name());
    for (const auto& wn : w)
        if (!f.member(wn)) throw Error(Err::NotInFilter, wn.str() + " is not a filter member");

    // Inductive construction: keep V_n with V_n + V_n inside the previous
    // U; pick the largest closure of a base set that fits inside
    // V_n intersect W_n, then the largest base halving-partner for it.
    // Largest choices keep the string informative; determinism comes from
    // preferring earlier base entries on ties.
    auto pick_largest = [](const std::vector<Subset>& cands) -> const Subset* {
        const Subset* best = nullptr;
        for (const auto& c : cands)
            if (!best || best->count() < c.count()) best = &c;
        return best;
    };

    std::vector<Subset> chain;
    Subset v = Subset::full_set(M.size());
    std::size_t n = 0;
    for (;;) {
        const Subset& wn = n < w.size() ? w[n] : w.back();
        Subset target = v & wn;
        std::vector<Subset> cands;
        for (const auto& b : f.base()) {
            Subset cb = h->close(b);
            if (cb.subset_of(target)) cands.push_back(cb);
        }
        if (cands.empty())
            throw Error(Err::NotQBase, "no closed base set inside " + target.str());
        Subset u = *pick_largest(cands);
        chain.push_back(u);
        // Halving partner inside u.
        std::vector<Subset> halves;
        for (const auto& b : f.base())
            if (M.set_sum(b, b).subset_of(u)) halves.push_back(b);
        if (halves.empty()) throw Error(Err::NoHalvingSet, "no halving base set inside " + u.str());
        v = *pick_largest(halves);
        ++n;
        if (n >= w.size() && chain.size() >= 2 && chain[chain.size() - 1] == chain[chain.size() - 2])
            break;
        if (chain.size() > f.base().size() + w.size() + M.size() + 2)
            throw Error(Err::Internal, "string construction failed to stabilize");
    }
    Subset tail = chain.back();
    chain.pop_back();
    while (chain.size() > 1 && chain.back() == tail) chain.pop_back();
    return QString(f.monoid(), std::move(chain), std::move(tail));
}

bool filter_equal(const ZeroFilter& f1, const ZeroFilter& f2) {
    if (f1.monoid().get() != f2.monoid().get()) return false;
    for (const auto& u : f1.base())
        if (!f2.member(u)) return false;
    for (const auto& u : f2.base())
        if (!f1.member(u)) return false;
    return true;
}

ZeroFilter join_filters(const std::vector<ZeroFilter>& filters) {
    if (filters.empty()) throw Error(Err::EmptyList, "join of no filters");
    for (const auto& f : filters)
        if (f.monoid().get() != filters.front().monoid().get())
            throw Error(Err::MixedMonoids, "join of filters over different monoids");
    std::vector<Subset> base;
    std::vector<std::size_t> idx(filters.size(), 0);
    for (;;) {
        Subset meet = Subset::full_set(filters.front().monoid()->size());
        for (std::size_t i = 0; i < filters.size(); ++i) meet &= filters[i].base()[idx[i]];
        base.push_back(meet);
        std::size_t i = 0;
        while (i < filters.size()) {
            if (++idx[i] < filters[i].base().size()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == filters.size()) break;
    }
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    return ZeroFilter(filters.front().monoid(), std::move(base));
}

} // namespace hulltop
