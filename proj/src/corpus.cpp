#include "hulltop/corpus.hpp"

#include <algorithm>

#include "hulltop/error.hpp"

namespace hulltop {

namespace fixtures {

// Fixture monoids are cached: filters, strings and pseudo-norms compare
// monoids by identity.
MonoidPtr z8() {
    static MonoidPtr m = make_cyclic(8);
    return m;
}

std::vector<Subset> z8_base() {
    return {Subset::of(8, {0, 1, 2, 6, 7}), Subset::of(8, {0, 1, 7}), Subset::of(8, {0})};
}

ZeroFilter z8_filter() { return ZeroFilter(z8(), z8_base()); }

QString z8_string() {
    return QString(z8(), {Subset::of(8, {0, 1, 2, 6, 7}), Subset::of(8, {0, 1, 7})},
                   Subset::of(8, {0}));
}

std::vector<Dyadic> z8_expected() {
    auto h = Dyadic::make(1, 1);
    auto one = Dyadic::one();
    return {Dyadic::zero(), h, one, one, one, one, one, h};
}

Subset bool3_ideal() { return Subset::of(8, {0, 1}); }

MonoidPtr cube31() {
    static MonoidPtr m = make_saturating_cube(3, 1);
    return m;
}

QString cube31_string() {
    return QString(cube31(), {Subset::of(4, {0, 1, 2}), Subset::of(4, {0, 1})}, Subset::of(4, {0}));
}

std::vector<Dyadic> cube31_expected() {
    return {Dyadic::zero(), Dyadic::make(1, 1), Dyadic::one(), Dyadic::one()};
}

namespace {
// Elements: 0, a=1, b=2, t=3, s=4.
constexpr std::uint16_t kPinchTable[25] = {
    0, 1, 2, 3, 4, // 0+.
    1, 3, 4, 4, 4, // a+.: a+a=t, a+b=s, a+t=s, a+s=s
    2, 4, 4, 4, 4, // b+.
    3, 4, 4, 4, 4, // t+.
    4, 4, 4, 4, 4, // s+.
};
} // namespace

MonoidPtr pinch() {
    static MonoidPtr m = [] {
        std::vector<std::uint16_t> op(kPinchTable, kPinchTable + 25);
        auto order = PartialOrder::from_pairs(5, {{0, 1}, {0, 2}, {1, 3}, {3, 4}, {2, 4}});
        return make_explicit("pinch", 5, 0, std::move(op), std::nullopt, std::move(order));
    }();
    return m;
}

QString pinch_string() {
    auto m = pinch();
    return QString(m, {Subset::full_set(5), Subset::of(5, {0, 1, 3}), Subset::of(5, {0, 1})},
                   Subset::of(5, {0}));
}

std::vector<Dyadic> pinch_rho_hat() {
    return {Dyadic::zero(), Dyadic::make(1, 2), Dyadic::one(), Dyadic::make(1, 1), Dyadic::make(3, 2)};
}

std::vector<Dyadic> pinch_theta() {
    return {Dyadic::zero(), Dyadic::make(1, 2), Dyadic::make(3, 2), Dyadic::make(1, 1),
            Dyadic::make(3, 2)};
}

} // namespace fixtures

namespace corpus {

MonoidChoice random_monoid(std::mt19937_64& rng, std::uint32_t max_carrier) {
    std::uniform_int_distribution<int> kind(0, 7);
    for (;;) {
        switch (kind(rng)) {
            case 5: {
                // The pinch monoid keeps strict regularization gaps in the
                // stream: its lower sets are translation-invariant but not
                // additive.
                if (max_carrier < 5) continue;
                return {fixtures::pinch(), "pinch"};
            }
            case 6: {
                // Idempotent join monoids with the inclusion order.
                std::uint32_t max_atoms = 1;
                while ((2u << max_atoms) <= max_carrier && max_atoms < 6) ++max_atoms;
                std::uniform_int_distribution<std::uint32_t> n(1, max_atoms);
                auto v = n(rng);
                if ((1u << v) > max_carrier) continue;
                return {make_boolean_join(v), "boolean_join(" + std::to_string(v) + ")"};
            }
            case 7: {
                // Ordered products: saturating cubes of different heights.
                std::uniform_int_distribution<std::uint32_t> k(1, 5);
                std::uint32_t ka = k(rng), kb = k(rng);
                if (std::uint64_t(ka + 1) * (kb + 1) > max_carrier) continue;
                auto p = make_product(make_saturating_cube(ka, 1), make_saturating_cube(kb, 1));
                return {p, p->name()};
            }
            case 0: {
                std::uniform_int_distribution<std::uint32_t> m(2, std::min<std::uint32_t>(max_carrier, 64));
                auto v = m(rng);
                return {make_cyclic(v), "cyclic(" + std::to_string(v) + ")"};
            }
            case 1: {
                std::uint32_t max_atoms = 1;
                while ((2u << max_atoms) <= max_carrier && max_atoms < 6) ++max_atoms;
                std::uniform_int_distribution<std::uint32_t> n(1, max_atoms);
                auto v = n(rng);
                if ((1u << v) > max_carrier) continue;
                return {make_boolean_sym_diff(v), "boolean_sym_diff(" + std::to_string(v) + ")"};
            }
            case 2: {
                std::uniform_int_distribution<std::uint32_t> k(1, 7), d(1, 3);
                std::uint32_t kk = k(rng), dd = d(rng);
                std::uint64_t sz = 1;
                for (std::uint32_t i = 0; i < dd; ++i) sz *= (kk + 1);
                if (sz > max_carrier || sz < 2) continue;
                return {make_saturating_cube(kk, dd),
                        "saturating_cube(" + std::to_string(kk) + "," + std::to_string(dd) + ")"};
            }
            case 3: {
                std::uniform_int_distribution<std::uint32_t> m(2, 8), n(1, 3);
                std::uint32_t mm = m(rng), nn = n(rng);
                if (std::uint64_t(mm) * (nn + 1) > max_carrier) continue;
                auto p = make_product(make_cyclic(mm), make_saturating_cube(nn, 1));
                if (p->size() > max_carrier) continue;
                return {p, p->name()};
            }
            default: {
                std::uniform_int_distribution<std::uint32_t> m(2, 6), n(2, 6);
                std::uint32_t mm = m(rng), nn = n(rng);
                if (std::uint64_t(mm) * nn > max_carrier) continue;
                auto p = make_product(make_cyclic(mm), make_cyclic(nn));
                return {p, p->name()};
            }
        }
    }
}

std::vector<HullPtr> hulls_for(const MonoidPtr& m, std::mt19937_64& rng) {
    std::vector<HullPtr> out;
    std::uint64_t seed = rng();
    out.push_back(make_powerset(m->size(), m->zero()));
    if (m->has_order()) {
        out.push_back(make_builtin("lower-sets", m));
        out.push_back(make_builtin("full-sets", m));
    }
    if (m->is_group()) out.push_back(make_symmetric_sets(m));
    out.push_back(make_submonoids(m));
    for (auto& h : out) {
        certify_one_algebraic(*h, seed, 600);
        hull_capabilities(m, *h, seed);
    }
    return out;
}

QString random_string(const MonoidPtr& m, const HullStructure& h, std::mt19937_64& rng,
                      std::uint32_t max_prefix) {
    std::uint32_t n = m->size();
    std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
    std::uniform_int_distribution<std::uint32_t> len(1, max_prefix);
    std::uniform_int_distribution<int> extra(0, 2);

    // Tail: close a small random seed set under sums and the hull operator.
    Subset tail = Subset::singleton(n, m->zero());
    if (extra(rng) == 0) tail.set(pick(rng));
    for (;;) {
        Subset next = h.close(tail | m->set_sum(tail, tail));
        if (next == tail) break;
        tail = next;
    }

    std::uint32_t target = len(rng);
    std::vector<Subset> prefix;
    Subset cur = tail;
    for (std::uint32_t i = 0; i < target; ++i) {
        Subset grown = cur | m->set_sum(cur, cur);
        for (int k = extra(rng); k > 0; --k) grown.set(pick(rng));
        prefix.push_back(h.close(grown));
        cur = prefix.back();
    }
    std::reverse(prefix.begin(), prefix.end());
    return QString(m, std::move(prefix), std::move(tail));
}

ZeroFilter filter_from_string(const QString& s) {
    std::vector<Subset> base = s.prefix();
    base.push_back(s.tail());
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    return ZeroFilter(s.monoid(), std::move(base));
}

GradedFunction random_graded(std::uint32_t size, unsigned grid_exp, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> v(0, std::uint64_t(1) << grid_exp);
    GradedFunction f;
    f.values.reserve(size);
    for (std::uint32_t i = 0; i < size; ++i) f.values.push_back(Dyadic::make(v(rng), grid_exp));
    return f;
}

RationalVector random_point(unsigned dim, std::mt19937_64& rng, int span) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, span);
    RationalVector x(dim);
    for (unsigned i = 0; i < dim; ++i) x[i] = Rational(num(rng), den(rng));
    return x;
}

RationalPolytope random_balanced_polytope(unsigned dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, 4);
    std::vector<RationalVector> verts;
    int c = count(rng);
    for (int i = 0; i < c; ++i) {
        RationalVector v = random_point(dim, rng);
        bool zero = true;
        for (const auto& e : v) zero = zero && e == 0;
        if (zero) v[0] = 1;
        RationalVector neg(dim);
        for (unsigned j = 0; j < dim; ++j) neg[j] = -v[j];
        verts.push_back(std::move(v));
        verts.push_back(std::move(neg));
    }
    return RationalPolytope::make(dim, std::move(verts));
}

} // namespace corpus

} // namespace hulltop
