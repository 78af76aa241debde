#include "hulltop/synth.hpp"

#include <algorithm>
#include <sstream>

#include "hulltop/error.hpp"

namespace hulltop {

namespace {

constexpr unsigned kMaxGridExp = 16;

unsigned effective_grid(const QString& s, unsigned grid_exp) {
    unsigned n = std::max<unsigned>({grid_exp, static_cast<unsigned>(s.prefix_length()), 1});
    if (n > kMaxGridExp) throw Error(Err::SizeOutOfRange, "grid exponent too large");
    return n;
}

PseudoNorm checked_pnorm(const MonoidPtr& m, std::vector<Dyadic> values, const std::string& context) {
    try {
        return PseudoNorm(m, std::move(values));
    } catch (const Error& e) {
        throw Falsification("SubadditivityViolation", e.what(), context);
    }
}

void assert_sandwich(const PseudoNorm& rho, const QString& s, unsigned grid_exp,
                     const std::string& context) {
    for (unsigned n = 0; n <= grid_exp; ++n) {
        Dyadic level = Dyadic::pow2(n);
        const Subset& un = s.at(n);
        if (!rho.strict_sublevel(level).subset_of(un))
            throw Falsification("SandwichViolation",
                                "rho^{-1}[0,2^-" + std::to_string(n) + ") not inside U_" +
                                    std::to_string(n),
                                context);
        if (!un.subset_of(rho.sublevel(level)))
            throw Falsification("SandwichViolation",
                                "U_" + std::to_string(n) + " not inside rho^{-1}[0,2^-" +
                                    std::to_string(n) + "]",
                                context);
    }
    if (!(rho.kernel() == s.tail()))
        throw Falsification("KernelViolation",
                            "ker rho = " + rho.kernel().str() + " differs from tail " + s.tail().str(),
                            context);
}

void assert_lower_continuous(PseudoNorm& rho, const HullStructure& h, const std::string& context) {
    auto lc = is_lower_continuous(h, rho.graded());
    if (!lc)
        throw Falsification("LowerContinuityViolation",
                            "sublevel at " + lc.failing_r.str() + " = " + lc.witness.str() +
                                " is not a member of " + h.name(),
                            context);
    rho.add_lower_continuity(h.name());
}

void require_basic(const HullPtr& r) {
    if (!r->certified(Capability::one_algebraic))
        throw Error(Err::NotBasic, r->name() + " lacks a 1-algebraic certificate");
    if (!r->certified(Capability::additive))
        throw Error(Err::NotBasic, r->name() + " lacks an additivity certificate");
    Subset z = Subset::singleton(r->carrier_size(), r->zero());
    if (!(r->close(z) == z))
        throw Error(Err::NotBasic, "{0} is not a member of " + r->name());
}

} // namespace

Subset dyadic_level_set(const QString& s, const Dyadic& q, unsigned grid_exp) {
    if (grid_exp > kMaxGridExp) throw Error(Err::SizeOutOfRange, "grid exponent too large");
    if (q.is_top() || q.is_zero()) throw Error(Err::OffGrid, "level must be a positive dyadic");
    if (q.exp() > grid_exp)
        throw Error(Err::OffGrid, q.str() + " has denominator beyond 2^" + std::to_string(grid_exp));
    const auto& m = *s.monoid();
    // q * 2^N as an integer; bit i (from the top) selects U_i.
    std::uint64_t k = q.num() << (grid_exp - q.exp());
    std::uint64_t whole = k >> grid_exp;
    Subset v = Subset::singleton(m.size(), m.zero());
    for (std::uint64_t i = 0; i < whole; ++i) v = m.set_sum(v, s.at(0));
    for (unsigned i = 1; i <= grid_exp; ++i)
        if ((k >> (grid_exp - i)) & 1u) v = m.set_sum(v, s.at(i));
    return m.set_sum(v, s.tail());
}

PseudoNorm synth_additive(const MonoidPtr& m, const HullStructure& h, const QString& s,
                          unsigned grid_exp) {
    if (!h.certified(Capability::additive))
        throw Error(Err::NotAdditive, h.name() + " lacks an additivity certificate");
    auto cert = validate_string(m, h, s);
    if (!cert) throw Error(Err::InvalidString, cert.witness);

    unsigned n = effective_grid(s, grid_exp);
    std::vector<Dyadic> values(m->size(), Dyadic::one());
    s.tail().for_each([&](std::uint32_t e) { values[e] = Dyadic::zero(); });
    Subset assigned = s.tail();
    for (std::uint64_t k = 1; k <= (std::uint64_t(1) << n); ++k) {
        Dyadic q = Dyadic::make(k, n);
        Subset level = dyadic_level_set(s, q, n);
        level.minus(assigned).for_each([&](std::uint32_t e) { values[e] = q; });
        assigned |= level;
    }

    std::string context = "string on " + m->name() + " against " + h.name();
    PseudoNorm rho = checked_pnorm(m, std::move(values), context);
    assert_lower_continuous(rho, h, context);
    assert_sandwich(rho, s, n, context);
    return rho;
}

PseudoNorm synth_translation(const MonoidPtr& m, const HullPtr& h, const QString& s,
                             unsigned grid_exp) {
    if (!h->certified(Capability::translation_invariant))
        throw Error(Err::NotTranslationInvariant,
                    h->name() + " lacks a translation-invariance certificate");
    auto cert = validate_string(m, *h, s);
    if (!cert) throw Error(Err::InvalidString, cert.witness);

    auto powerset = make_powerset(m->size(), m->zero());
    PseudoNorm rho_hat = synth_additive(m, *powerset, s, grid_exp);
    GradedFunction theta = lower_regularize(*h, rho_hat.graded());

    std::string context = "string on " + m->name() + " against " + h->name();
    for (std::uint32_t g = 0; g < m->size(); ++g)
        if (rho_hat.value(g) < theta.values[g])
            throw Falsification("RegularizationViolation",
                                "theta exceeds the powerset pseudo-norm at " + std::to_string(g),
                                context);
    PseudoNorm rho = checked_pnorm(m, theta.values, context);
    assert_lower_continuous(rho, *h, context);
    assert_sandwich(rho, s, effective_grid(s, grid_exp), context);
    return rho;
}

PseudoNorm regularize_pnorm(const MonoidPtr& m, const HullPtr& r, const PseudoNorm& rho) {
    require_basic(r);
    GradedFunction up = upper_regularize(*r, rho.graded());
    std::string context = "regularization of a pseudo-norm on " + m->name() + " against " + r->name();
    for (std::uint32_t g = 0; g < m->size(); ++g)
        if (up.values[g] < rho.value(g))
            throw Falsification("RegularizationViolation",
                                "regularized value dropped at " + std::to_string(g), context);
    PseudoNorm out = checked_pnorm(m, up.values, context);
    assert_lower_continuous(out, *r, context);
    return out;
}

PseudoNorm synth_QR(const ZeroFilter& f, const HullPtr& q, const HullPtr& r,
                    const std::vector<Subset>& w, unsigned grid_exp) {
    const MonoidPtr& m = f.monoid();
    require_basic(r);
    auto enh = is_enhancible(*q, *r);
    if (!enh) throw Error(Err::NotEnhancible, q->name() + " is not " + r->name() + "-enhancible: " + enh.witness);
    auto qb = is_Q_base(f, *q);
    if (!qb) throw Error(Err::NotQBase, "filter is not a " + q->name() + "-base: " + qb.witness);
    auto rb = is_Q_base(f, *r);
    if (!rb) throw Error(Err::NotQBase, "filter is not a " + r->name() + "-base: " + rb.witness);

    QString s = refine_string(f, q, w);
    PseudoNorm rho = [&] {
        if (q->certified(Capability::additive)) return synth_additive(m, *q, s, grid_exp);
        if (q->certified(Capability::translation_invariant))
            return synth_translation(m, q, s, grid_exp);
        throw Error(Err::NotAdditive,
                    q->name() + " is neither additive nor translation-invariant (certified)");
    }();
    PseudoNorm out = regularize_pnorm(m, r, rho);

    std::string context = "pipeline on " + m->name() + " (" + q->name() + ", " + r->name() + ")";
    auto qr = intersect(q, r);
    assert_lower_continuous(out, *qr, context);
    out.add_lower_continuity(q->name());
    out.add_lower_continuity(r->name());

    unsigned n_eff = effective_grid(s, grid_exp);
    for (std::size_t i = 0; i < std::max(w.size(), std::size_t(n_eff) + 1); ++i) {
        const Subset& wi = i < w.size() ? w[i] : w.back();
        unsigned e = static_cast<unsigned>(std::min<std::size_t>(i, 63));
        if (!out.strict_sublevel(Dyadic::pow2(e)).subset_of(wi))
            throw Falsification("SandwichViolation",
                                "open ball at 2^-" + std::to_string(i) + " escapes W_" +
                                    std::to_string(i),
                                context);
    }
    for (unsigned i = 0; i <= n_eff; ++i)
        if (!f.member(out.sublevel(Dyadic::pow2(i))))
            throw Falsification("TauContinuityViolation",
                                "closed ball at 2^-" + std::to_string(i) + " is not a filter member",
                                context);
    return out;
}

PseudoNorm symmetrize(const MonoidPtr& m, const PseudoNorm& rho) {
    if (!m->is_group()) throw Error(Err::NotAGroup, m->name() + " is not a group");
    std::vector<Dyadic> values(m->size());
    bool changed = false;
    for (std::uint32_t g = 0; g < m->size(); ++g) {
        values[g] = max(rho.value(g), rho.value(m->inverse(g)));
        if (!(values[g] == rho.value(g))) changed = true;
    }
    if (!changed) {
        PseudoNorm out = rho;
        out.set_symmetric_flag();
        return out;
    }
    PseudoNorm out = checked_pnorm(m, std::move(values), "symmetrization on " + m->name());
    out.set_symmetric_flag();
    return out;
}

PseudoNorm combine(const std::vector<PseudoNorm>& list) {
    if (list.empty()) throw Error(Err::EmptyList, "combine of an empty list");
    const MonoidPtr& m = list.front().monoid();
    for (const auto& p : list)
        if (p.monoid().get() != m.get())
            throw Error(Err::MixedMonoids, "combine over different monoids");

    std::vector<Dyadic> values(m->size(), Dyadic::zero());
    for (std::size_t i = 0; i < list.size(); ++i) {
        unsigned shift = static_cast<unsigned>(i) + 1;
        for (std::uint32_t g = 0; g < m->size(); ++g)
            values[g] = max(values[g], list[i].value(g).clip1().scale_down(shift));
    }
    PseudoNorm out = checked_pnorm(m, std::move(values), "combination on " + m->name());

    // Shared lower-continuity survives: sublevels of the maximum are
    // intersections of scaled sublevels, and member families are
    // intersection-closed.
    std::set<std::string> flags = list.front().lower_continuous_against();
    bool all_symmetric = list.front().symmetric_flag();
    for (const auto& p : list) {
        std::set<std::string> keep;
        for (const auto& name : flags)
            if (p.lower_continuous_against().count(name)) keep.insert(name);
        flags = std::move(keep);
        all_symmetric = all_symmetric && p.symmetric_flag();
    }
    out.set_lower_continuity(std::move(flags));
    if (all_symmetric) out.set_symmetric_flag();

    for (const auto& p : list)
        if (!is_rho_continuous(p, out))
            throw Falsification("ContinuityViolation",
                                "an input is not continuous with respect to the combination",
                                "combination on " + m->name());
    return out;
}

RhoContinuity is_rho_continuous(const PseudoNorm& lambda, const PseudoNorm& rho) {
    if (lambda.monoid().get() != rho.monoid().get())
        throw Error(Err::MixedMonoids, "continuity across different monoids");
    RhoContinuity res;
    if (!rho.kernel().subset_of(lambda.kernel())) return res;
    res.holds = true;
    res.delta = Dyadic::one();
    for (const auto& v : rho.values())
        if (!v.is_zero()) res.delta = min(res.delta, v);
    return res;
}

ZeroFilter induced_filter(const PseudoNorm& rho, unsigned depth) {
    const MonoidPtr& m = rho.monoid();
    if (m->is_group())
        for (std::uint32_t g = 0; g < m->size(); ++g)
            if (!(rho.value(g) == rho.value(m->inverse(g))))
                throw Error(Err::NotSymmetric,
                            "pseudo-norm is not symmetric at " + std::to_string(g));
    Subset ker = rho.kernel();
    std::vector<Subset> base;
    unsigned n = 0;
    for (;;) {
        Subset ball = rho.sublevel(Dyadic::pow2(n));
        if (base.empty() || !(base.back() == ball)) base.push_back(ball);
        if (n >= depth && ball == ker) break;
        if (n > 200) throw Error(Err::Internal, "induced filter failed to reach the kernel");
        ++n;
    }
    return ZeroFilter(m, std::move(base));
}

GeneratedFamily generate_family(const ZeroFilter& f, const HullPtr& q, const HullPtr& r) {
    const MonoidPtr& m = f.monoid();
    if (!m->is_group()) throw Error(Err::NotAGroup, m->name() + " is not a group");
    if (!q->certified(Capability::symmetric))
        throw Error(Err::NotSymmetric, q->name() + " lacks a symmetry certificate");
    if (!r->certified(Capability::symmetric))
        throw Error(Err::NotSymmetric, r->name() + " lacks a symmetry certificate");
    require_basic(r);
    if (!is_group_filter(f)) throw Error(Err::NotQBase, "filter is not a group filter");

    auto enh = is_enhancible(*q, *r);
    if (!enh)
        throw Error(Err::NotEnhancible, q->name() + " is not " + r->name() + "-enhancible: " + enh.witness);

    auto sym = make_symmetric_sets(m);
    auto rs = intersect(r, sym);
    require_basic(rs);
    std::string context = "generation on " + m->name() + " (" + q->name() + ", " + r->name() + ")";
    auto enh_rs = is_enhancible(*q, *rs);
    if (!enh_rs)
        throw Falsification("EnhancibilityViolation",
                            q->name() + " is not enhancible for the symmetrized structure: " +
                                enh_rs.witness,
                            context);

    GeneratedFamily out;
    std::vector<ZeroFilter> induced;
    for (const auto& w : f.base()) {
        PseudoNorm rho = synth_QR(f, q, rs, {w});
        for (std::uint32_t g = 0; g < m->size(); ++g)
            if (!(rho.value(g) == rho.value(m->inverse(g))))
                throw Falsification("SymmetryViolation",
                                    "pipeline output is not symmetric at " + std::to_string(g), context);
        rho.set_symmetric_flag();
        induced.push_back(induced_filter(rho, 1));
        out.family.push_back(std::move(rho));
    }
    if (!filter_equal(join_filters(induced), f))
        throw Falsification("GenerationMismatch",
                            "the induced filters do not regenerate the original filter", context);
    out.combined = combine(out.family);
    if (!filter_equal(induced_filter(*out.combined, 1), f))
        throw Falsification("GenerationMismatch",
                            "the combined pseudo-norm does not regenerate the filter", context);
    return out;
}

PseudoNorm continuity_transfer(const GradedFunction& f, const ZeroFilter& filter, const HullPtr& q,
                               const HullPtr& r) {
    const MonoidPtr& m = filter.monoid();
    if (f.size() != m->size()) throw Error(Err::Internal, "carrier mismatch");
    if (!f.values[m->zero()].is_zero())
        throw Error(Err::NotContinuousAtZero, "function does not vanish at zero");

    Subset ker_f(m->size());
    for (std::uint32_t g = 0; g < m->size(); ++g)
        if (f.values[g].is_zero()) ker_f.set(g);

    auto strict_sublevel = [&](const Dyadic& rr) {
        Subset s(m->size());
        for (std::uint32_t g = 0; g < m->size(); ++g)
            if (f.values[g] < rr) s.set(g);
        return s;
    };

    std::vector<Subset> w;
    for (unsigned n = 0;; ++n) {
        Subset wn = strict_sublevel(Dyadic::pow2(n));
        if (!filter.member(wn))
            throw Error(Err::NotContinuousAtZero,
                        "f^{-1}[0,2^-" + std::to_string(n) + ") = " + wn.str() +
                            " is not a filter member");
        w.push_back(wn);
        if (wn == ker_f) break;
        if (n > 200) throw Error(Err::Internal, "sublevels failed to reach the kernel of f");
    }

    PseudoNorm rho = synth_QR(filter, q, r, w);
    if (!rho.kernel().subset_of(ker_f))
        throw Falsification("KernelViolation", "ker rho escapes ker f",
                            "continuity transfer on " + m->name());
    return rho;
}

} // namespace hulltop
