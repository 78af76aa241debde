#include "hulltop/hull.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "hulltop/error.hpp"

namespace hulltop {

const char* capability_name(Capability c) {
    switch (c) {
        case Capability::one_algebraic: return "1-algebraic";
        case Capability::additive: return "additive";
        case Capability::translation_invariant: return "translation-invariant";
        case Capability::symmetric: return "symmetric";
    }
    return "?";
}

const char* cert_tag_name(CertTag t) {
    switch (t) {
        case CertTag::by_construction: return "by-construction";
        case CertTag::exhaustive: return "exhaustive";
        case CertTag::sampled: return "sampled";
    }
    return "?";
}

namespace {

Subset subset_from_mask(std::uint32_t n, std::uint64_t mask) {
    Subset s(n);
    while (mask) {
        std::uint32_t b = static_cast<std::uint32_t>(__builtin_ctzll(mask));
        s.set(b);
        mask &= mask - 1;
    }
    return s;
}

Subset random_subset(std::uint32_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> card(0, n);
    std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
    Subset s(n);
    std::uint32_t t = card(rng);
    for (std::uint32_t i = 0; i < t; ++i) s.set(pick(rng));
    return s;
}

CertTag weaker(CertTag a, CertTag b) {
    return static_cast<CertTag>(std::max(static_cast<int>(a), static_cast<int>(b)));
}

} // namespace

HullStructure::HullStructure(std::string name, std::uint32_t size, std::uint32_t zero, ClosureFn cl)
    : name_(std::move(name)), size_(size), zero_(zero), cl_(std::move(cl)) {
    if (zero_ >= size_) throw Error(Err::MissingContext, "base point out of range");
    Subset x = Subset::full_set(size_);
    if (!(cl_(x) == x))
        throw Error(Err::InvalidTable, "closure does not fix the carrier in " + name_);
    point_closures_.resize(size_);
    for (std::uint32_t e = 0; e < size_; ++e)
        point_closures_[e] = cl_(Subset::singleton(size_, e));
}

Subset HullStructure::close(const Subset& a) const {
    if (a.carrier_size() != size_) throw Error(Err::Internal, "carrier mismatch in close");
    return cl_(a);
}

Subset HullStructure::core(const Subset& a) const {
    if (!certified(Capability::one_algebraic))
        throw Error(Err::NotOneAlgebraic, name_ + " has no 1-algebraic certificate");
    Subset out(size_);
    a.for_each([&](std::uint32_t x) {
        if (point_closure(x).subset_of(a)) out.set(x);
    });
    return out;
}

const Subset& HullStructure::point_closure(std::uint32_t x) const { return *point_closures_[x]; }

bool HullStructure::has_certificate(Capability c) const { return certs_.count(c) != 0; }

bool HullStructure::certified(Capability c) const {
    auto it = certs_.find(c);
    return it != certs_.end() && it->second.holds;
}

const Certificate* HullStructure::certificate(Capability c) const {
    auto it = certs_.find(c);
    return it == certs_.end() ? nullptr : &it->second;
}

void HullStructure::attach(Certificate cert) { certs_[cert.cap] = std::move(cert); }

std::vector<Certificate> HullStructure::certificates() const {
    std::vector<Certificate> out;
    for (const auto& [cap, cert] : certs_) out.push_back(cert);
    return out;
}

Subset GradedFunction::sublevel(const Dyadic& r) const {
    Subset s(size());
    for (std::uint32_t i = 0; i < size(); ++i)
        if (values[i] <= r) s.set(i);
    return s;
}

std::vector<Dyadic> GradedFunction::value_grid() const {
    std::vector<Dyadic> grid(values);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

// --- Constructors -----------------------------------------------------------

HullPtr make_powerset(std::uint32_t size, std::uint32_t zero) {
    auto h = std::make_shared<HullStructure>("powerset", size, zero,
                                             [](const Subset& a) { return a; });
    for (auto cap : {Capability::one_algebraic, Capability::additive,
                     Capability::translation_invariant, Capability::symmetric})
        h->attach(Certificate{cap, CertTag::by_construction, true, "", 0, 0});
    return h;
}

HullPtr make_lower_sets(const PartialOrder& order, std::uint32_t zero) {
    std::uint32_t n = order.size();
    std::vector<Subset> down;
    down.reserve(n);
    for (std::uint32_t e = 0; e < n; ++e) down.push_back(order.down(e));
    auto h = std::make_shared<HullStructure>(
        "lower-sets", n, zero, [n, down = std::move(down)](const Subset& a) {
            Subset out(n);
            a.for_each([&](std::uint32_t e) { out |= down[e]; });
            return out;
        });
    // A union of down-sets is a down-set.
    h->attach(Certificate{Capability::one_algebraic, CertTag::by_construction, true, "", 0, 0});
    return h;
}

HullPtr make_full_sets(const PartialOrder& order, std::uint32_t zero) {
    std::uint32_t n = order.size();
    std::vector<Subset> down, up;
    for (std::uint32_t e = 0; e < n; ++e) {
        down.push_back(order.down(e));
        up.push_back(order.up(e));
    }
    // The full hull is reached in one step: a point r lies between two
    // members of A iff it is above some element and below some element.
    return std::make_shared<HullStructure>(
        "full-sets", n, zero,
        [n, down = std::move(down), up = std::move(up)](const Subset& a) {
            if (a.empty()) return a;
            Subset above(n), below(n);
            a.for_each([&](std::uint32_t e) {
                above |= up[e];
                below |= down[e];
            });
            return above & below;
        });
}

HullPtr make_symmetric_sets(const MonoidPtr& m) {
    if (!m->is_group())
        throw Error(Err::MissingContext, "symmetric sets need an inverse table on " + m->name());
    auto h = std::make_shared<HullStructure>(
        "symmetric", m->size(), m->zero(),
        [m](const Subset& a) { return a | m->negate(a); });
    // Unions of symmetric sets are symmetric; -(A+B) = -A + -B.
    h->attach(Certificate{Capability::one_algebraic, CertTag::by_construction, true, "", 0, 0});
    h->attach(Certificate{Capability::additive, CertTag::by_construction, true, "", 0, 0});
    h->attach(Certificate{Capability::symmetric, CertTag::by_construction, true, "", 0, 0});
    return h;
}

HullPtr make_submonoids(const MonoidPtr& m) {
    auto h = std::make_shared<HullStructure>(
        "submonoids", m->size(), m->zero(), [m](const Subset& a) {
            Subset cur = a;
            cur.set(m->zero());
            std::vector<std::uint32_t> frontier = cur.elements();
            while (!frontier.empty()) {
                std::vector<std::uint32_t> fresh;
                auto elems = cur.elements();
                for (auto f : frontier)
                    for (auto c : elems) {
                        std::uint32_t s = m->add(f, c);
                        if (!cur.test(s)) {
                            cur.set(s);
                            fresh.push_back(s);
                        }
                    }
                frontier = std::move(fresh);
            }
            return cur;
        });
    // (S+T)+(S+T) = (S+S)+(T+T) <= S+T for submonoids S, T.
    h->attach(Certificate{Capability::additive, CertTag::by_construction, true, "", 0, 0});
    return h;
}

HullPtr make_solid_sets(const MonoidPtr& m) {
    if (!m->has_order()) throw Error(Err::MissingContext, "solid sets need an order on " + m->name());
    const auto& ord = m->order();
    for (std::uint32_t g = 0; g < m->size(); ++g)
        if (!ord.le(m->zero(), g))
            throw Error(Err::MissingContext,
                        "solid sets need the unit to be the least element of " + m->name());
    // On a positive cone |e| = e, so solid sets are exactly the lower sets.
    auto h = make_lower_sets(ord, m->zero());
    auto solid = std::make_shared<HullStructure>("solid", m->size(), m->zero(),
                                                 [h](const Subset& a) { return h->close(a); });
    solid->attach(Certificate{Capability::one_algebraic, CertTag::by_construction, true, "", 0, 0});
    if (m->op_monotone())
        solid->attach(
            Certificate{Capability::translation_invariant, CertTag::by_construction, true, "", 0, 0});
    hull_capabilities(m, *solid);
    return solid;
}

HullPtr make_from_members(std::string name, std::uint32_t size, std::uint32_t zero,
                          std::vector<Subset> members) {
    members.push_back(Subset::full_set(size));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return std::make_shared<HullStructure>(
        std::move(name), size, zero, [size, members = std::move(members)](const Subset& a) {
            Subset out = Subset::full_set(size);
            for (const auto& mset : members)
                if (a.subset_of(mset)) out &= mset;
            return out;
        });
}

HullPtr make_builtin(const std::string& kind, const MonoidPtr& m) {
    if (kind == "powerset") return make_powerset(m->size(), m->zero());
    if (kind == "symmetric") return make_symmetric_sets(m);
    if (kind == "submonoids") return make_submonoids(m);
    if (kind == "solid") return make_solid_sets(m);
    if (kind == "lower-sets" || kind == "full-sets") {
        if (!m->has_order())
            throw Error(Err::MissingContext, kind + " needs an order on " + m->name());
        auto h = kind == "lower-sets" ? make_lower_sets(m->order(), m->zero())
                                      : make_full_sets(m->order(), m->zero());
        if (m->op_monotone())
            // Monotone translations pull lower (resp. full) sets back to
            // lower (resp. full) sets.
            h->attach(
                Certificate{Capability::translation_invariant, CertTag::by_construction, true, "", 0, 0});
        return h;
    }
    throw Error(Err::MissingContext, "unknown hull kind: " + kind);
}

// --- Operations -------------------------------------------------------------

std::vector<Subset> enumerate_members(const HullStructure& h) {
    std::uint32_t n = h.carrier_size();
    if (n > 16) throw Error(Err::SizeOutOfRange, "member enumeration needs carrier <= 16");
    std::vector<Subset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        Subset a = subset_from_mask(n, mask);
        if (h.close(a) == a) out.push_back(a);
    }
    return out;
}

Certificate certify_one_algebraic(HullStructure& h, std::uint64_t seed, std::uint32_t samples) {
    std::uint32_t n = h.carrier_size();
    Certificate cert{Capability::one_algebraic, CertTag::exhaustive, true, "", 0, 0};
    auto check = [&](const Subset& a) {
        Subset u(n);
        a.for_each([&](std::uint32_t x) { u |= h.point_closure(x); });
        if (!(h.close(a) == u)) {
            cert.holds = false;
            cert.witness = "cl(" + a.str() + ") = " + h.close(a).str() + " != union of point closures " +
                           u.str();
            return false;
        }
        return true;
    };
    if (n <= 16) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask)
            if (!check(subset_from_mask(n, mask))) break;
    } else {
        cert.tag = CertTag::sampled;
        cert.seed = seed;
        cert.samples = samples;
        std::mt19937_64 rng(seed);
        for (std::uint32_t i = 0; i < samples; ++i)
            if (!check(random_subset(n, rng))) break;
    }
    if (!h.has_certificate(Capability::one_algebraic) || !cert.holds ||
        h.certificate(Capability::one_algebraic)->tag != CertTag::by_construction)
        h.attach(cert);
    return cert;
}

namespace {

// Member corpus for capability checks: full enumeration when the carrier
// admits it, otherwise closures of random subsets.
std::vector<Subset> member_corpus(const HullStructure& h, std::mt19937_64& rng, bool& exhaustive,
                                  std::uint32_t sample_members = 300) {
    std::uint32_t n = h.carrier_size();
    if (n <= 16) {
        auto all = enumerate_members(h);
        if (all.size() <= 4096) {
            exhaustive = true;
            return all;
        }
    }
    exhaustive = false;
    std::set<Subset> got;
    got.insert(h.close(Subset::singleton(n, h.zero())));
    got.insert(Subset::full_set(n));
    for (std::uint32_t i = 0; i < sample_members; ++i) got.insert(h.close(random_subset(n, rng)));
    return {got.begin(), got.end()};
}

} // namespace

std::vector<Certificate> hull_capabilities(const MonoidPtr& m, HullStructure& h, std::uint64_t seed) {
    if (m->size() != h.carrier_size() || m->zero() != h.zero())
        throw Error(Err::Internal, "monoid/hull carrier mismatch");
    std::vector<Certificate> out;
    std::mt19937_64 rng(seed);
    bool exhaustive = false;
    std::vector<Subset> members;
    auto need = [&](Capability c) {
        return !h.has_certificate(c) || (h.certificate(c)->tag != CertTag::by_construction);
    };
    auto ensure_members = [&]() {
        if (members.empty()) members = member_corpus(h, rng, exhaustive);
    };

    if (need(Capability::additive)) {
        ensure_members();
        Certificate cert{Capability::additive, exhaustive ? CertTag::exhaustive : CertTag::sampled, true, "",
                         exhaustive ? 0 : seed, 0};
        if (exhaustive) {
            for (std::size_t i = 0; i < members.size() && cert.holds; ++i)
                for (std::size_t j = i; j < members.size(); ++j) {
                    Subset s = m->set_sum(members[i], members[j]);
                    if (!(h.close(s) == s)) {
                        cert.holds = false;
                        cert.witness = members[i].str() + " + " + members[j].str() + " = " + s.str() +
                                       " is not a member";
                        break;
                    }
                }
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
            cert.samples = 10000;
            for (std::uint32_t k = 0; k < cert.samples && cert.holds; ++k) {
                const Subset& p = members[pick(rng)];
                const Subset& q = members[pick(rng)];
                Subset s = m->set_sum(p, q);
                if (!(h.close(s) == s)) {
                    cert.holds = false;
                    cert.witness = p.str() + " + " + q.str() + " = " + s.str() + " is not a member";
                }
            }
        }
        h.attach(cert);
        out.push_back(cert);
    }

    if (need(Capability::translation_invariant)) {
        ensure_members();
        Certificate cert{Capability::translation_invariant,
                         exhaustive ? CertTag::exhaustive : CertTag::sampled, true, "",
                         exhaustive ? 0 : seed, exhaustive ? 0 : std::uint32_t(members.size())};
        for (std::uint32_t e = 0; e < m->size() && cert.holds; ++e)
            for (const auto& q : members) {
                Subset pre = m->translate_preimage(e, q);
                if (!(h.close(pre) == pre)) {
                    cert.holds = false;
                    cert.witness = "T_" + std::to_string(e) + "^{-1}(" + q.str() + ") = " + pre.str() +
                                   " is not a member";
                    break;
                }
            }
        h.attach(cert);
        out.push_back(cert);
    }

    if (m->is_group() && need(Capability::symmetric)) {
        ensure_members();
        Certificate cert{Capability::symmetric, exhaustive ? CertTag::exhaustive : CertTag::sampled, true,
                         "", exhaustive ? 0 : seed, exhaustive ? 0 : std::uint32_t(members.size())};
        for (const auto& q : members) {
            Subset neg = m->negate(q);
            if (!(h.close(neg) == neg)) {
                cert.holds = false;
                cert.witness = "-" + q.str() + " = " + neg.str() + " is not a member";
                break;
            }
        }
        h.attach(cert);
        out.push_back(cert);
    }
    return out;
}

LowerContinuity is_lower_continuous(const HullStructure& h, const GradedFunction& f) {
    LowerContinuity res;
    if (f.size() != h.carrier_size()) throw Error(Err::Internal, "carrier mismatch");
    auto grid = f.value_grid();
    grid.insert(grid.begin(), Dyadic::zero());
    for (const auto& r : grid) {
        Subset s = f.sublevel(r);
        if (!h.is_member(s)) {
            res.holds = false;
            res.failing_r = r;
            res.witness = s;
            return res;
        }
    }
    return res;
}

GradedFunction upper_regularize(const HullStructure& h, const GradedFunction& f) {
    if (!h.certified(Capability::one_algebraic))
        throw Error(Err::NotOneAlgebraic, h.name() + " has no 1-algebraic certificate");
    GradedFunction out;
    out.values.resize(f.size());
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        Dyadic v = Dyadic::zero();
        h.point_closure(x).for_each([&](std::uint32_t y) { v = max(v, f.values[y]); });
        out.values[x] = v;
    }
    return out;
}

GradedFunction lower_regularize(const HullStructure& h, const GradedFunction& f) {
    std::vector<Dyadic> grid;
    grid.push_back(Dyadic::zero());
    for (const auto& v : f.value_grid())
        if (!v.is_top()) grid.push_back(v);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    GradedFunction out;
    out.values.assign(f.size(), Dyadic::top());
    for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
        Subset closed = h.close(f.sublevel(*it));
        closed.for_each([&](std::uint32_t x) { out.values[x] = *it; });
    }
    return out;
}

CheckResult is_enhancible(const HullStructure& q, const HullStructure& r, std::uint64_t seed,
                          std::uint32_t samples) {
    if (!r.certified(Capability::one_algebraic))
        throw Error(Err::NotOneAlgebraic, r.name() + " has no 1-algebraic certificate");
    if (q.carrier_size() != r.carrier_size() || q.zero() != r.zero())
        throw Error(Err::Internal, "carrier mismatch in is_enhancible");
    std::uint32_t n = q.carrier_size();
    CheckResult res;
    auto check = [&](const Subset& q0) {
        if (!q0.test(q.zero())) return true;
        if (!(q.close(q0) == q0)) return true; // not a member
        Subset c = r.core(q0);
        if (!c.test(q.zero())) {
            res.holds = false;
            res.witness = "core of " + q0.str() + " = " + c.str() + " misses the base point";
            return false;
        }
        if (!(q.close(c) == c)) {
            res.holds = false;
            res.witness = "core of " + q0.str() + " = " + c.str() + " is not a member";
            return false;
        }
        return true;
    };
    if (n <= 12) {
        res.tag = CertTag::exhaustive;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask)
            if (!check(subset_from_mask(n, mask))) break;
    } else {
        res.tag = CertTag::sampled;
        res.seed = seed;
        res.samples = samples;
        std::mt19937_64 rng(seed);
        if (!check(q.close(Subset::singleton(n, q.zero())))) return res;
        if (!check(Subset::full_set(n))) return res;
        for (std::uint32_t i = 0; i < samples; ++i) {
            Subset a = q.close(random_subset(n, rng));
            a.set(q.zero());
            if (!check(q.close(a))) break;
        }
    }
    return res;
}

HullPtr intersect(const HullPtr& q, const HullPtr& r) {
    if (q->carrier_size() != r->carrier_size() || q->zero() != r->zero())
        throw Error(Err::Internal, "carrier mismatch in intersect");
    auto h = std::make_shared<HullStructure>(
        "intersect(" + q->name() + "," + r->name() + ")", q->carrier_size(), q->zero(),
        [q, r](const Subset& a) {
            Subset cur = a;
            for (;;) {
                Subset next = r->close(q->close(cur));
                if (next == cur) return cur;
                cur = next;
            }
        });
    for (auto cap : {Capability::one_algebraic, Capability::additive,
                     Capability::translation_invariant, Capability::symmetric})
        if (q->certified(cap) && r->certified(cap)) {
            Certificate c{cap, weaker(q->certificate(cap)->tag, r->certificate(cap)->tag), true, "", 0, 0};
            h->attach(c);
        }
    return h;
}

} // namespace hulltop
