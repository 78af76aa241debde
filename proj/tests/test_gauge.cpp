#include <doctest.h>

#include "hulltop/corpus.hpp"
#include "hulltop/error.hpp"
#include "hulltop/gauge.hpp"

#include <random>
#include <sstream>

using namespace hulltop;

namespace {

RationalPolytope cross2() {
    return RationalPolytope::make(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
}

RationalPolytope square2() {
    return RationalPolytope::make(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
}

Rational l1(const RationalVector& x) {
    Rational s(0);
    for (const auto& e : x) s += e < 0 ? Rational(-e) : e;
    return s;
}

Rational linf(const RationalVector& x) {
    Rational s(0);
    for (const auto& e : x) {
        Rational a = e < 0 ? Rational(-e) : e;
        if (a > s) s = a;
    }
    return s;
}

} // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK(format_rational(Rational(-6, 8)) == "-3/4");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("gauge of the cross-polytope is the l1 norm") {
    auto p = cross2();
    REQUIRE(p.balanced());
    auto g = gauge(p, {1, 1});
    REQUIRE(!g.top);
    CHECK(g.value == Rational(2));

    CHECK(gauge(p, {0, 0}).value == Rational(0));

    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        auto x = corpus::random_point(2, rng);
        auto v = gauge(p, x);
        REQUIRE(!v.top);
        CHECK(v.value == l1(x));
    }
}

TEST_CASE("gauge of the hypercube is the sup norm") {
    auto p = square2();
    std::mt19937_64 rng(37);
    for (int i = 0; i < 50; ++i) {
        auto x = corpus::random_point(2, rng);
        auto v = gauge(p, x);
        REQUIRE(!v.top);
        CHECK(v.value == linf(x));
    }
}

TEST_CASE("points outside every dilate have top gauge") {
    auto seg = RationalPolytope::make(2, {{1, 0}, {-1, 0}});
    REQUIRE(seg.balanced());
    CHECK(gauge(seg, {0, 1}).top);
    CHECK(gauge(seg, {Rational(1, 2), 0}).value == Rational(1, 2));

    auto unbalanced = RationalPolytope::make(2, {{1, 0}, {0, 1}});
    CHECK(!unbalanced.balanced());
    CHECK_THROWS_AS(gauge(unbalanced, {1, 0}), Error);
    CHECK_THROWS_AS(gauge(cross2(), {1, 2, 3}), Error);
}

TEST_CASE("membership certificates verify themselves") {
    auto p = cross2();
    auto in = membership(p, {Rational(1, 2), Rational(1, 4)});
    CHECK(in.inside);
    auto out = membership(p, {2, 2});
    CHECK(!out.inside);
    REQUIRE(out.separator.size() == 3);

    // Gauge sandwich against the membership route on random points.
    std::mt19937_64 rng(41);
    for (int i = 0; i < 60; ++i) {
        auto x = corpus::random_point(2, rng);
        auto g = gauge(p, x);
        bool inside = membership(p, x).inside;
        bool le_one = !g.top && g.value <= 1;
        CHECK(inside == le_one);
        if (!g.top && g.value < 1) CHECK(inside);
    }
}

TEST_CASE("seminorm axioms hold exactly on samples") {
    std::mt19937_64 rng(43);
    std::vector<std::pair<RationalVector, RationalVector>> pairs;
    for (int i = 0; i < 40; ++i)
        pairs.emplace_back(corpus::random_point(2, rng), corpus::random_point(2, rng));
    std::vector<Rational> scalars = {Rational(0), Rational(1), Rational(-1), Rational(3, 2),
                                     Rational(-7, 3)};
    auto rep = seminorm_axioms(cross2(), pairs, scalars);
    CHECK(rep.subadditivity_checks == 40);
    CHECK(rep.homogeneity_checks == 200);
}

TEST_CASE("symmetric core construction") {
    auto core = symm_core(2, {{1, 0}, {-1, 0}, {0, 2}});
    CHECK(core.vertices().size() == 2);
    CHECK(core.balanced());
    CHECK(gauge(core, {0, 1}).top); // the core is a segment

    // A symmetric input is its own core.
    auto full = symm_core(2, {{1, 1}, {-1, -1}, {2, 0}, {-2, 0}});
    CHECK(full.vertices().size() == 4);

    CHECK_THROWS_AS(symm_core(2, {{1, 0}, {0, 1}}), Error);
}

TEST_CASE("core is contained in the hull of the input") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<RationalVector> pts;
        for (int i = 0; i < 5; ++i) {
            auto v = corpus::random_point(2, rng);
            pts.push_back(v);
            RationalVector neg = {-v[0], -v[1]};
            if (i % 2 == 0) pts.push_back(neg);
        }
        try {
            auto core = symm_core(2, pts);
            auto hull = RationalPolytope::make(2, pts);
            for (const auto& v : core.vertices()) CHECK(membership(hull, v).inside);
        } catch (const Error& e) {
            CHECK(e.code() == Err::EmptyCore);
        }
    }
}

TEST_CASE("M-seminorm predicate separates the sup and l1 gauges") {
    std::mt19937_64 rng(53);
    std::vector<std::pair<RationalVector, RationalVector>> pairs;
    for (int i = 0; i < 30; ++i) {
        auto a = corpus::random_point(2, rng);
        auto b = corpus::random_point(2, rng);
        for (auto* v : {&a, &b})
            for (auto& e : *v)
                if (e < 0) e = -e; // non-negative sample
        pairs.emplace_back(a, b);
    }
    pairs.emplace_back(RationalVector{1, 0}, RationalVector{0, 1});
    CHECK(is_M_seminorm(square2(), pairs));
    CHECK(!is_M_seminorm(cross2(), pairs));
    // e = f is trivially true.
    CHECK(is_M_seminorm(cross2(), {{RationalVector{1, 1}, RationalVector{1, 1}}}));
}

TEST_CASE("product gauges are maxima of the coordinate gauges") {
    auto seg = RationalPolytope::make(1, {{1}, {-1}});
    auto prod = product_polytope(seg, cross2());
    REQUIRE(prod.dim() == 3);
    std::mt19937_64 rng(59);
    for (int i = 0; i < 30; ++i) {
        auto x = corpus::random_point(3, rng);
        auto g = gauge(prod, x);
        auto g1 = gauge(seg, {x[0]});
        auto g2 = gauge(cross2(), {x[1], x[2]});
        REQUIRE(!g1.top);
        REQUIRE(!g2.top);
        CHECK(g.value == std::max(g1.value, g2.value));
    }
}

TEST_CASE("random balanced polytopes: sandwich and homogeneity") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        unsigned dim = 1 + static_cast<unsigned>(trial % 3);
        auto p = corpus::random_balanced_polytope(dim, rng);
        REQUIRE(p.balanced());
        for (int i = 0; i < 20; ++i) {
            auto x = corpus::random_point(dim, rng);
            auto g = gauge(p, x);
            bool inside = membership(p, x).inside;
            CHECK(inside == (!g.top && g.value <= 1));
            // Exact positive homogeneity.
            Rational q(3, 2);
            RationalVector qx(dim);
            for (unsigned j = 0; j < dim; ++j) qx[j] = q * x[j];
            auto gq = gauge(p, qx);
            if (g.top)
                CHECK(gq.top);
            else
                CHECK(gq.value == q * g.value);
        }
    }
}

TEST_CASE("polytope files round trip") {
    auto p = cross2();
    std::ostringstream os;
    p.print(os);
    CHECK(os.str() == "1 0\n-1 0\n0 1\n0 -1\n");
    std::istringstream is(os.str());
    auto q = RationalPolytope::parse(is);
    CHECK(q.dim() == 2);
    CHECK(q.vertices() == p.vertices());
}
