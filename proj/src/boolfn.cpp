#include "hulltop/boolfn.hpp"

#include <sstream>

#include "hulltop/error.hpp"
#include "hulltop/synth.hpp"

namespace hulltop {

BooleanAlgebra BooleanAlgebra::make(std::uint32_t atoms) {
    if (atoms < 1 || atoms > 10)
        throw Error(Err::SizeOutOfRange, "atom count " + std::to_string(atoms) + " outside 1..10");
    BooleanAlgebra ba;
    ba.atoms_ = atoms;
    ba.mask_ = (1u << atoms) - 1;
    ba.sym_diff_ = make_boolean_sym_diff(atoms);
    ba.join_ = make_boolean_join(atoms);
    ba.lower_ = make_lower_sets(ba.sym_diff_->order(), 0);
    // Certify the lower sets against the sym-diff group: additive (L + M is
    // lower for lower L, M) and symmetric (every element is self-inverse).
    hull_capabilities(ba.sym_diff_, *ba.lower_);
    if (atoms <= 4) {
        std::uint32_t n = ba.element_count();
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                for (std::uint32_t c = 0; c < n; ++c)
                    if (ba.meet_op(a, ba.join_op(b, c)) !=
                        ba.join_op(ba.meet_op(a, b), ba.meet_op(a, c)))
                        throw Error(Err::InvalidTable, "distributivity failure");
    }
    return ba;
}

std::string BooleanAlgebra::format_table(const std::vector<Dyadic>& mu) const {
    std::ostringstream os;
    for (std::uint32_t e = 0; e < element_count(); ++e) {
        for (std::uint32_t bit = atoms_; bit-- > 0;) os << ((e >> bit) & 1u);
        os << ' ' << mu[e].str() << '\n';
    }
    return os.str();
}

SubmeasureCheck is_submeasure(const BooleanAlgebra& ba, const std::vector<Dyadic>& mu) {
    SubmeasureCheck res;
    std::uint32_t n = ba.element_count();
    if (mu.size() != n) throw Error(Err::InvalidTable, "submeasure table size mismatch");
    if (!mu[0].is_zero()) {
        res.ok = false;
        res.witness = "mu(bottom) = " + mu[0].str();
        return res;
    }
    for (std::uint32_t l = 0; l < n; ++l)
        for (std::uint32_t m = 0; m < n; ++m) {
            if (ba.leq(l, m) && mu[m] < mu[l]) {
                res.ok = false;
                res.witness = "not order preserving on " + std::to_string(l) + " <= " + std::to_string(m);
                return res;
            }
            if (mu[l] + mu[m] < mu[ba.join_op(l, m)]) {
                res.ok = false;
                res.witness = "mu(join) exceeds the sum on (" + std::to_string(l) + "," +
                              std::to_string(m) + ")";
                return res;
            }
        }
    return res;
}

SubmeasureEquivReport submeasure_equiv(const BooleanAlgebra& ba, const std::vector<Dyadic>& mu,
                                       bool log_bridge) {
    SubmeasureEquivReport rep;
    std::uint32_t n = ba.element_count();
    if (mu.size() != n) throw Error(Err::InvalidTable, "submeasure table size mismatch");

    auto sub = is_submeasure(ba, mu);
    rep.submeasure = sub.ok;
    rep.witness_submeasure = sub.witness;

    // Independent evaluation of the sym-diff pseudo-norm side.
    rep.delta_pseudo_norm = mu[0].is_zero();
    if (!rep.delta_pseudo_norm) rep.witness_delta = "mu(bottom) nonzero";
    for (std::uint32_t l = 0; l < n && rep.delta_pseudo_norm; ++l)
        for (std::uint32_t m = 0; m < n; ++m)
            if (mu[l] + mu[m] < mu[l ^ m]) {
                rep.delta_pseudo_norm = false;
                rep.witness_delta = "not subadditive over sym-diff on (" + std::to_string(l) + "," +
                                    std::to_string(m) + ")";
                break;
            }
    if (rep.delta_pseudo_norm) {
        auto lc = is_lower_continuous(*ba.lower(), GradedFunction{mu});
        if (!lc) {
            rep.delta_pseudo_norm = false;
            rep.witness_delta = "sublevel at " + lc.failing_r.str() + " is not a lower set";
        }
    }

    if (log_bridge)
        for (std::uint32_t l = 0; l < n; ++l)
            for (std::uint32_t m = 0; m < n; ++m) {
                std::uint32_t lm = ba.diff_op(l, m);
                std::ostringstream os;
                os << "mu(" << l << " v " << m << ") = mu(" << lm << " ^ " << m << ") <= mu(" << lm
                   << ") + mu(" << m << ") <= mu(" << l << ") + mu(" << m << ")";
                rep.bridge.push_back(os.str());
            }

    if (rep.submeasure != rep.delta_pseudo_norm)
        throw Falsification("SubmeasureEquivalenceViolation",
                            "submeasure axioms and sym-diff pseudo-norm axioms disagree",
                            "table " + ba.format_table(mu));
    return rep;
}

ZeroFilter fn_filter_from_ideal(const BooleanAlgebra& ba, const Subset& ideal) {
    if (ideal.carrier_size() != ba.element_count())
        throw Error(Err::NotAnIdeal, "carrier mismatch");
    if (!ideal.test(0)) throw Error(Err::NotAnIdeal, "ideal misses the bottom element");
    if (!(ba.lower()->close(ideal) == ideal))
        throw Error(Err::NotAnIdeal, ideal.str() + " is not a lower set");
    if (!ba.sym_diff()->set_sum(ideal, ideal).subset_of(ideal))
        throw Error(Err::NotAnIdeal, ideal.str() + " is not closed under symmetric difference");
    return ZeroFilter(ba.sym_diff(), {ideal});
}

FnReport fn_equivalence_suite(const BooleanAlgebra& ba, const ZeroFilter& f) {
    if (f.monoid().get() != ba.sym_diff().get())
        throw Error(Err::MixedMonoids, "filter is not over the sym-diff view");
    FnReport rep;

    // (i) group filter with a base of lower sets.
    {
        bool grp = is_group_filter(f);
        auto qb = is_Q_base(f, *ba.lower());
        rep.group_lower_filter = grp && qb.holds;
        if (!grp) rep.detail_i = "inversion is not continuous";
        if (!qb) rep.detail_i = qb.witness;
    }

    // (ii) the same base as a join-view filter, with relative complements of
    // some inner base set staying inside each base set.
    {
        rep.join_view_filter = true;
        try {
            ZeroFilter join_view(ba.join(), f.base());
            auto qb = is_Q_base(join_view, *ba.lower());
            if (!qb) {
                rep.join_view_filter = false;
                rep.detail_ii = qb.witness;
            }
        } catch (const Error& e) {
            rep.join_view_filter = false;
            rep.detail_ii = e.what();
        }
        if (rep.join_view_filter) {
            for (const auto& u : f.base()) {
                bool found = false;
                for (const auto& b : f.base()) {
                    bool stable = true;
                    b.for_each([&](std::uint32_t a) {
                        if (!stable) return;
                        for (std::uint32_t x = 0; x < ba.element_count(); ++x)
                            if (!u.test(ba.diff_op(a, x))) {
                                stable = false;
                                return;
                            }
                    });
                    if (stable) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    rep.join_view_filter = false;
                    rep.detail_ii = "relative complements escape " + u.str();
                    break;
                }
            }
        }
    }

    // (iii) generated by submeasures: synthesize along the lower sets on
    // both slots and regenerate the filter.
    {
        try {
            PseudoNorm mu = synth_QR(f, ba.lower(), ba.lower(), f.base());
            auto sm = is_submeasure(ba, mu.values());
            if (!sm) throw Falsification("FnSynthesisViolation", sm.witness, ba.format_table(mu.values()));
            if (!filter_equal(induced_filter(mu, 1), f)) {
                rep.generated_by_submeasures = false;
                rep.detail_iii = "synthesized submeasure does not regenerate the filter";
            } else {
                rep.generated_by_submeasures = true;
                rep.synthesized = std::move(mu);
            }
        } catch (const Error& e) {
            rep.generated_by_submeasures = false;
            rep.detail_iii = e.what();
        }
    }

    if (!rep.all_agree()) {
        std::ostringstream os;
        os << "clauses disagree: (i)=" << rep.group_lower_filter << " (ii)=" << rep.join_view_filter
           << " (iii)=" << rep.generated_by_submeasures << "; " << rep.detail_i << "; " << rep.detail_ii
           << "; " << rep.detail_iii;
        std::string base_dump;
        for (const auto& b : f.base()) base_dump += b.str() + " ";
        throw Falsification("FnEquivalenceViolation", os.str(), "base " + base_dump);
    }
    return rep;
}

bool lattice_inequality_atomwise() {
    for (std::uint32_t bits = 0; bits < 16; ++bits) {
        std::uint32_t a = bits & 1, b = (bits >> 1) & 1, c = (bits >> 2) & 1, d = (bits >> 3) & 1;
        std::uint32_t lhs = (a ^ b) | (c ^ d);
        std::uint32_t rhs = (a | c) ^ (b | d);
        if (rhs > lhs) return false;
    }
    return true;
}

bool lattice_inequality_bruteforce(const BooleanAlgebra& ba) {
    if (ba.atoms() > 4) throw Error(Err::SizeOutOfRange, "brute force limited to 4 atoms");
    std::uint32_t n = ba.element_count();
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c)
                for (std::uint32_t d = 0; d < n; ++d) {
                    std::uint32_t lhs = (a ^ b) | (c ^ d);
                    std::uint32_t rhs = (a | c) ^ (b | d);
                    if (!ba.leq(rhs, lhs)) return false;
                }
    return true;
}

} // namespace hulltop
