#include "hulltop/pseudonorm.hpp"

#include <ostream>

#include "hulltop/error.hpp"

namespace hulltop {

QString::QString(MonoidPtr m, std::vector<Subset> prefix, Subset tail)
    : monoid_(std::move(m)), prefix_(std::move(prefix)), tail_(std::move(tail)) {
    const auto& M = *monoid_;
    if (tail_.carrier_size() != M.size()) throw Error(Err::InvalidString, "tail carrier mismatch");
    if (!tail_.test(M.zero())) throw Error(Err::InvalidString, "tail misses zero");
    for (const auto& u : prefix_) {
        if (u.carrier_size() != M.size()) throw Error(Err::InvalidString, "prefix carrier mismatch");
        if (!u.test(M.zero())) throw Error(Err::InvalidString, "prefix set misses zero: " + u.str());
    }
    for (std::size_t n = 1; n < prefix_.size(); ++n)
        if (!M.set_sum(prefix_[n], prefix_[n]).subset_of(prefix_[n - 1]))
            throw Error(Err::InvalidString, "U_" + std::to_string(n) + " + U_" + std::to_string(n) +
                                                " not inside U_" + std::to_string(n - 1));
    if (!M.set_sum(tail_, tail_).subset_of(tail_))
        throw Error(Err::InvalidString, "tail + tail not inside tail");
    if (!prefix_.empty() && !tail_.subset_of(prefix_.back()))
        throw Error(Err::InvalidString, "tail not inside the last prefix entry");
}

StringCert validate_string(const MonoidPtr& m, const HullStructure& h, const QString& s) {
    StringCert cert;
    if (s.monoid().get() != m.get()) {
        cert.ok = false;
        cert.witness = "string belongs to a different monoid";
        return cert;
    }
    // The QString constructor has already enforced the arithmetic
    // invariants; membership in H remains.
    for (std::size_t n = 0; n < s.prefix_length(); ++n)
        if (!h.is_member(s.prefix()[n])) {
            cert.ok = false;
            cert.witness = "U_" + std::to_string(n) + " = " + s.prefix()[n].str() + " is not a member of " +
                           h.name();
            return cert;
        }
    if (!h.is_member(s.tail())) {
        cert.ok = false;
        cert.witness = "tail " + s.tail().str() + " is not a member of " + h.name();
    }
    return cert;
}

PseudoNorm::PseudoNorm(MonoidPtr m, std::vector<Dyadic> values)
    : monoid_(std::move(m)), values_(std::move(values)) {
    const auto& M = *monoid_;
    if (values_.size() != M.size()) throw Error(Err::InvalidTable, "pseudo-norm table size mismatch");
    for (const auto& v : values_)
        if (v.is_top() || Dyadic::one() < v)
            throw Error(Err::InvalidTable, "pseudo-norm value above 1");
    if (!values_[M.zero()].is_zero())
        throw Error(Err::InvalidTable, "pseudo-norm does not vanish at zero");
    for (std::uint32_t f = 0; f < M.size(); ++f)
        for (std::uint32_t g = f; g < M.size(); ++g) {
            std::uint32_t s = M.add(f, g);
            if (values_[f] + values_[g] < values_[s])
                throw Error(Err::InvalidTable,
                            "not subadditive: rho(" + std::to_string(f) + "+" + std::to_string(g) +
                                ") = " + values_[s].str() + " > " + values_[f].str() + " + " +
                                values_[g].str() + " on " + M.name());
        }
}

Subset PseudoNorm::kernel() const {
    Subset k(monoid_->size());
    for (std::uint32_t g = 0; g < monoid_->size(); ++g)
        if (values_[g].is_zero()) k.set(g);
    return k;
}

Subset PseudoNorm::sublevel(const Dyadic& r) const {
    Subset s(monoid_->size());
    for (std::uint32_t g = 0; g < monoid_->size(); ++g)
        if (values_[g] <= r) s.set(g);
    return s;
}

Subset PseudoNorm::strict_sublevel(const Dyadic& r) const {
    Subset s(monoid_->size());
    for (std::uint32_t g = 0; g < monoid_->size(); ++g)
        if (values_[g] < r) s.set(g);
    return s;
}

void PseudoNorm::print_table(std::ostream& os) const {
    for (std::uint32_t g = 0; g < monoid_->size(); ++g) os << g << ' ' << values_[g].str() << '\n';
}

} // namespace hulltop
