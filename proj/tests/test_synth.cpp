#include <doctest.h>

#include "hulltop/corpus.hpp"
#include "hulltop/error.hpp"
#include "hulltop/synth.hpp"
#include "oracles.hpp"

#include <random>

using namespace hulltop;

TEST_CASE("string validation") {
    auto z8 = fixtures::z8();
    auto pw = make_powerset(8, 0);
    auto sym = make_symmetric_sets(z8);
    QString s = fixtures::z8_string();
    CHECK(validate_string(z8, *pw, s).ok);
    CHECK(validate_string(z8, *sym, s).ok); // all sets symmetric

    CHECK_THROWS_WITH_AS(QString(z8, {Subset::of(8, {0, 1}), Subset::of(8, {0, 1})},
                                 Subset::of(8, {0})),
                         doctest::Contains("not inside U_0"), Error);

    // Fixed-point failure carries a witness.
    auto subs = make_submonoids(z8);
    auto cert = validate_string(z8, *subs, s);
    CHECK(!cert.ok);
    CHECK(!cert.witness.empty());
}

TEST_CASE("dyadic level sets") {
    QString s = fixtures::z8_string();
    CHECK(dyadic_level_set(s, Dyadic::make(1, 1), 2) == Subset::of(8, {0, 1, 7}));
    CHECK(dyadic_level_set(s, Dyadic::make(3, 2), 2) == Subset::of(8, {0, 1, 7}));
    CHECK(dyadic_level_set(s, Dyadic::make(3, 1), 2) == Subset::of(8, {0, 1, 2, 3, 5, 6, 7}));
    CHECK_THROWS_AS(dyadic_level_set(s, Dyadic::make(1, 5), 2), Error); // off grid
    CHECK_THROWS_AS(dyadic_level_set(s, Dyadic::zero(), 2), Error);
}

TEST_CASE("level sets are monotone and superadditive in the level") {
    QString s = fixtures::z8_string();
    unsigned n = 2;
    for (std::uint64_t i = 1; i <= (1u << (n + 1)); ++i) {
        for (std::uint64_t j = i; j <= (1u << (n + 1)); ++j) {
            if (i + j > (2u << n)) continue; // p + q <= 2
            Subset vp = dyadic_level_set(s, Dyadic::make(i, n), n);
            Subset vq = dyadic_level_set(s, Dyadic::make(j, n), n);
            Subset vpq = dyadic_level_set(s, Dyadic::make(i + j, n), n);
            CHECK(vp.subset_of(vq));
            CHECK(s.monoid()->set_sum(vp, vq).subset_of(vpq));
        }
    }
}

TEST_CASE("additive synthesis: cyclic fixture with frozen table and scan oracle") {
    auto z8 = fixtures::z8();
    auto pw = make_powerset(8, 0);
    QString s = fixtures::z8_string();
    PseudoNorm rho = synth_additive(z8, *pw, s);
    CHECK(rho.values() == fixtures::z8_expected());
    CHECK(rho.kernel() == s.tail());
    for (std::uint32_t e = 0; e < 8; ++e) {
        CHECK(oracles::confirms_value(z8, s, e, rho.value(e), 4));
        CHECK(oracles::confirms_value(z8, s, e, rho.value(e), 5));
    }
}

TEST_CASE("additive synthesis: constant carrier string is identically zero") {
    auto z8 = fixtures::z8();
    auto pw = make_powerset(8, 0);
    auto g = Subset::full_set(8);
    QString s(z8, {g}, g);
    PseudoNorm rho = synth_additive(z8, *pw, s);
    for (std::uint32_t e = 0; e < 8; ++e) CHECK(rho.value(e).is_zero());
}

TEST_CASE("degenerate carriers and empty prefixes") {
    // The one-element group supports the whole pipeline trivially.
    auto one = make_cyclic(1);
    auto pw1 = make_powerset(1, 0);
    QString s1(one, {Subset::full_set(1)}, Subset::full_set(1));
    PseudoNorm triv = synth_additive(one, *pw1, s1);
    CHECK(triv.value(0).is_zero());
    CHECK(filter_equal(induced_filter(triv, 0), ZeroFilter(one, {Subset::full_set(1)})));

    // Strings may have an empty prefix: the tail alone is the string.
    auto z8 = fixtures::z8();
    auto pw = make_powerset(8, 0);
    QString tail_only(z8, {}, Subset::of(8, {0, 4}));
    PseudoNorm rho = synth_additive(z8, *pw, tail_only);
    CHECK(rho.kernel() == Subset::of(8, {0, 4}));
    for (std::uint32_t e : {1u, 2u, 3u, 5u, 6u, 7u}) CHECK(rho.value(e) == Dyadic::one());
}

TEST_CASE("grid refinement beyond the prefix changes nothing") {
    auto z8 = fixtures::z8();
    auto pw = make_powerset(8, 0);
    QString s = fixtures::z8_string();
    PseudoNorm base = synth_additive(z8, *pw, s);
    for (unsigned grid : {3u, 5u, 9u}) {
        PseudoNorm finer = synth_additive(z8, *pw, s, grid);
        CHECK(finer.values() == base.values());
    }
}

TEST_CASE("additive synthesis: Boolean ideal strings") {
    auto b3 = make_boolean_sym_diff(3);
    auto lower = make_lower_sets(b3->order(), 0);
    hull_capabilities(b3, *lower);
    REQUIRE(lower->certified(Capability::additive)); // sym-diff of lower sets is lower
    Subset ideal = fixtures::bool3_ideal();
    Subset bottom = Subset::of(8, {0});

    // Prefix of length 2: the value at the atom is 1/2, confirmed by the
    // infimum scan.
    QString s2(b3, {ideal, ideal}, bottom);
    PseudoNorm rho2 = synth_additive(b3, *lower, s2);
    CHECK(rho2.value(0).is_zero());
    CHECK(rho2.value(1) == Dyadic::make(1, 1));
    for (std::uint32_t e = 2; e < 8; ++e) CHECK(rho2.value(e) == Dyadic::one());
    for (std::uint32_t e = 0; e < 8; ++e) CHECK(oracles::confirms_value(b3, s2, e, rho2.value(e), 5));

    // Prefix of length 3 pushes the atom down to 1/4.
    QString s3(b3, {ideal, ideal, ideal}, bottom);
    PseudoNorm rho3 = synth_additive(b3, *lower, s3);
    CHECK(rho3.value(1) == Dyadic::make(1, 2));
    for (std::uint32_t e = 0; e < 8; ++e) CHECK(oracles::confirms_value(b3, s3, e, rho3.value(e), 6));
}

TEST_CASE("translation synthesis: powerset path is the additive norm") {
    auto z8 = fixtures::z8();
    auto pw = make_powerset(8, 0);
    QString s = fixtures::z8_string();
    PseudoNorm theta = synth_translation(z8, pw, s);
    CHECK(theta.values() == fixtures::z8_expected());
}

TEST_CASE("translation synthesis: full sets on the saturating chain") {
    auto cube = fixtures::cube31();
    auto full = make_full_sets(cube->order(), 0);
    hull_capabilities(cube, *full);
    REQUIRE(full->certified(Capability::translation_invariant));
    PseudoNorm theta = synth_translation(cube, full, fixtures::cube31_string());
    CHECK(theta.values() == fixtures::cube31_expected());
}

TEST_CASE("translation synthesis: pinned strict regularization gap") {
    auto m = fixtures::pinch();
    auto lower = make_builtin("lower-sets", m);
    hull_capabilities(m, *lower);
    REQUIRE(lower->certified(Capability::translation_invariant));
    REQUIRE(!lower->certified(Capability::additive)); // the point of this monoid

    QString s = fixtures::pinch_string();
    auto pw = make_powerset(5, 0);
    PseudoNorm rho_hat = synth_additive(m, *pw, s);
    CHECK(rho_hat.values() == fixtures::pinch_rho_hat());
    // The powerset norm is not lower-continuous here.
    CHECK(!is_lower_continuous(*lower, rho_hat.graded()).holds);

    PseudoNorm theta = synth_translation(m, lower, s);
    CHECK(theta.values() == fixtures::pinch_theta());
    // Strictly below at b = 2.
    CHECK(theta.value(2) < rho_hat.value(2));

    // The powerset values agree with the literal infimum scan.
    for (std::uint32_t e = 0; e < 5; ++e) CHECK(oracles::confirms_value(m, s, e, rho_hat.value(e), 6));

    // Maximality against the enumeration oracle on the value grid.
    std::vector<Dyadic> grid = {Dyadic::zero(), Dyadic::make(1, 2), Dyadic::make(1, 1),
                                Dyadic::make(3, 2), Dyadic::one()};
    auto best = oracles::lower_regularize_scan(*lower, rho_hat.graded(), grid);
    CHECK(theta.values() == best.values);
}

TEST_CASE("pseudo-norm regularization") {
    auto cube = fixtures::cube31();
    auto pw = make_powerset(4, 0);
    auto lower = make_builtin("lower-sets", cube);
    hull_capabilities(cube, *lower);
    REQUIRE(lower->certified(Capability::additive));

    // A valid pseudo-norm that is not monotone: the running maximum over
    // down-sets fixes that and stays a pseudo-norm.
    PseudoNorm rho(cube, {Dyadic::zero(), Dyadic::make(1, 1), Dyadic::make(1, 2),
                          Dyadic::make(1, 1)});
    PseudoNorm reg = regularize_pnorm(cube, lower, rho);
    CHECK(reg.values() == std::vector<Dyadic>{Dyadic::zero(), Dyadic::make(1, 1), Dyadic::make(1, 1),
                                              Dyadic::make(1, 1)});
    CHECK(is_lower_continuous(*lower, reg.graded()).holds);

    // Against the powerset nothing changes.
    PseudoNorm same = regularize_pnorm(cube, pw, rho);
    CHECK(same.values() == rho.values());

    // The running-maximum arithmetic on the non-subadditive table from the
    // graded-function side.
    GradedFunction g{{Dyadic::zero(), Dyadic::make(1, 1), Dyadic::make(1, 2), Dyadic::one()}};
    auto gr = upper_regularize(*lower, g);
    CHECK(gr.values == std::vector<Dyadic>{Dyadic::zero(), Dyadic::make(1, 1), Dyadic::make(1, 1),
                                           Dyadic::one()});

    CHECK_THROWS_AS(regularize_pnorm(cube, make_full_sets(cube->order(), 0), rho), Error);
}

TEST_CASE("full pipeline") {
    auto z8 = fixtures::z8();
    auto pw = make_powerset(8, 0);
    auto f = fixtures::z8_filter();

    // Both hulls trivial: the pipeline reduces to the additive synthesis.
    PseudoNorm rho = synth_QR(f, pw, pw, fixtures::z8_base());
    CHECK(rho.values() == fixtures::z8_expected());

    // Boolean ideal with lower sets on both slots.
    auto b3 = make_boolean_sym_diff(3);
    auto lower = make_lower_sets(b3->order(), 0);
    hull_capabilities(b3, *lower);
    ZeroFilter fi(b3, {fixtures::bool3_ideal()});
    PseudoNorm mu = synth_QR(fi, lower, lower, fi.base());
    CHECK(mu.kernel() == fixtures::bool3_ideal());
    CHECK(mu.lower_continuous_against().count("lower-sets") == 1);

    // Saturating square: full sets through the lower-set regularization.
    auto cube2 = make_saturating_cube(3, 2);
    auto full2 = make_builtin("full-sets", cube2);
    auto lower2 = make_builtin("lower-sets", cube2);
    hull_capabilities(cube2, *full2);
    hull_capabilities(cube2, *lower2);
    std::mt19937_64 rng(21);
    QString base_string = corpus::random_string(cube2, *lower2, rng);
    ZeroFilter f2 = corpus::filter_from_string(base_string);
    // Lower sets are full, so the string base is a full-set base too.
    REQUIRE(is_Q_base(f2, *full2).holds);
    PseudoNorm out = synth_QR(f2, full2, lower2, f2.base());
    CHECK(is_lower_continuous(*full2, out.graded()).holds);
    CHECK(is_lower_continuous(*lower2, out.graded()).holds);

    // Requesting a hull without the needed certificate fails cleanly.
    auto subs = make_submonoids(z8);
    CHECK_THROWS_AS(synth_QR(f, pw, subs, fixtures::z8_base()), Error);
}

TEST_CASE("symmetrization") {
    auto z3 = make_cyclic(3);
    PseudoNorm rho(z3, {Dyadic::zero(), Dyadic::make(1, 2), Dyadic::make(1, 1)});
    PseudoNorm s = symmetrize(z3, rho);
    CHECK(s.values() == std::vector<Dyadic>{Dyadic::zero(), Dyadic::make(1, 1), Dyadic::make(1, 1)});
    CHECK(s.symmetric_flag());

    PseudoNorm again = symmetrize(z3, s);
    CHECK(again.values() == s.values());

    auto b2 = make_boolean_sym_diff(2);
    PseudoNorm any(b2, {Dyadic::zero(), Dyadic::make(1, 2), Dyadic::make(1, 1), Dyadic::make(3, 2)});
    CHECK(symmetrize(b2, any).values() == any.values());

    CHECK_THROWS_AS(symmetrize(make_boolean_join(2),
                               PseudoNorm(make_boolean_join(2), std::vector<Dyadic>(4))),
                    Error);
}

TEST_CASE("combination") {
    auto z8 = fixtures::z8();
    auto pw = make_powerset(8, 0);
    PseudoNorm rho1 = synth_additive(z8, *pw, fixtures::z8_string());
    std::vector<Dyadic> ind(8, Dyadic::one());
    ind[0] = Dyadic::zero();
    PseudoNorm rho2(z8, std::move(ind));

    PseudoNorm single = combine({rho1});
    for (std::uint32_t e = 0; e < 8; ++e) CHECK(single.value(e) == rho1.value(e).scale_down(1));

    PseudoNorm twice = combine({rho1, rho1});
    for (std::uint32_t e = 0; e < 8; ++e) CHECK(twice.value(e) == rho1.value(e).scale_down(1));

    PseudoNorm both = combine({rho1, rho2});
    CHECK(both.value(1) == Dyadic::make(1, 2)); // max(1/4, 1/4)
    CHECK(both.value(4) == Dyadic::make(1, 1)); // max(1/2, 1/4)

    // Bounded below by each summand and above by the dyadic-weighted sum.
    for (std::uint32_t e = 0; e < 8; ++e) {
        Dyadic sum = rho1.value(e).clip1().scale_down(1) + rho2.value(e).clip1().scale_down(2);
        CHECK(rho1.value(e).clip1().scale_down(1) <= both.value(e));
        CHECK(both.value(e) <= sum);
    }

    CHECK_THROWS_AS(combine({}), Error);
    CHECK_THROWS_AS(combine({rho1, PseudoNorm(make_cyclic(3), std::vector<Dyadic>(3))}), Error);
}

TEST_CASE("relative continuity") {
    auto z4 = make_cyclic(4);
    PseudoNorm rho(z4, {Dyadic::zero(), Dyadic::make(1, 1), Dyadic::one(), Dyadic::make(1, 1)});
    PseudoNorm lam(z4, {Dyadic::zero(), Dyadic::make(1, 2), Dyadic::make(1, 2), Dyadic::make(1, 2)});
    // lambda <= rho pointwise implies continuity.
    auto r = is_rho_continuous(lam, rho);
    CHECK(r.holds);
    CHECK(r.delta == Dyadic::make(1, 1));

    PseudoNorm zero(z4, std::vector<Dyadic>(4));
    PseudoNorm pos(z4, {Dyadic::zero(), Dyadic::one(), Dyadic::one(), Dyadic::one()});
    CHECK(!is_rho_continuous(pos, zero).holds);
    CHECK(is_rho_continuous(zero, pos).holds);
}

TEST_CASE("induced filters") {
    auto z8 = fixtures::z8();
    auto pw = make_powerset(8, 0);
    PseudoNorm rho = synth_additive(z8, *pw, fixtures::z8_string());
    ZeroFilter f = induced_filter(rho, 2);
    REQUIRE(f.base().size() == 3);
    CHECK(f.base()[0] == Subset::full_set(8));
    CHECK(f.base()[1] == Subset::of(8, {0, 1, 7}));
    CHECK(f.base()[2] == Subset::of(8, {0}));

    PseudoNorm zero(z8, std::vector<Dyadic>(8));
    ZeroFilter ind = induced_filter(zero, 0);
    CHECK(ind.base() == std::vector<Subset>{Subset::full_set(8)});

    // Depth extends automatically until the kernel is reached.
    // Circular distance scaled by 1/8: symmetric and subadditive.
    PseudoNorm fine(z8, {Dyadic::zero(), Dyadic::make(1, 3), Dyadic::make(1, 2), Dyadic::make(3, 3),
                         Dyadic::make(1, 1), Dyadic::make(3, 3), Dyadic::make(1, 2), Dyadic::make(1, 3)});
    ZeroFilter df = induced_filter(fine, 0);
    CHECK(df.base().back() == Subset::of(8, {0}));

    // Symmetry is required over groups.
    PseudoNorm skew(z8, {Dyadic::zero(), Dyadic::make(1, 1), Dyadic::one(), Dyadic::one(),
                         Dyadic::one(), Dyadic::one(), Dyadic::one(), Dyadic::one()});
    CHECK_THROWS_AS(induced_filter(skew, 1), Error);
}

TEST_CASE("generated family regenerates the filter") {
    auto z8 = fixtures::z8();
    auto pw = make_powerset(8, 0);

    ZeroFilter discrete(z8, {Subset::of(8, {0})});
    auto gen = generate_family(discrete, pw, pw);
    REQUIRE(gen.family.size() == 1);
    CHECK(gen.family[0].kernel() == Subset::of(8, {0}));
    CHECK(filter_equal(induced_filter(*gen.combined, 1), discrete));

    auto sym = make_symmetric_sets(z8);
    auto f = fixtures::z8_filter();
    auto gen2 = generate_family(f, sym, pw);
    CHECK(gen2.family.size() == 3);
    for (const auto& rho : gen2.family) CHECK(rho.symmetric_flag());

    // Boolean ideal filter: a single submeasure-shaped generator.
    auto b3 = make_boolean_sym_diff(3);
    auto lower = make_lower_sets(b3->order(), 0);
    hull_capabilities(b3, *lower);
    ZeroFilter fi(b3, {fixtures::bool3_ideal()});
    auto gen3 = generate_family(fi, lower, lower);
    REQUIRE(gen3.family.size() == 1);
    CHECK(gen3.family[0].kernel() == fixtures::bool3_ideal());
}

TEST_CASE("continuity transfer") {
    auto z8 = fixtures::z8();
    auto pw = make_powerset(8, 0);
    auto f = fixtures::z8_filter();

    PseudoNorm rho_hat = synth_additive(z8, *pw, fixtures::z8_string());
    PseudoNorm rho = continuity_transfer(rho_hat.graded(), f, pw, pw);
    CHECK(rho.kernel() == Subset::of(8, {0}));
    CHECK(is_rho_continuous(rho_hat, rho).holds);

    GradedFunction zero;
    zero.values.assign(8, Dyadic::zero());
    PseudoNorm triv = continuity_transfer(zero, f, pw, pw);
    CHECK(is_rho_continuous(PseudoNorm(z8, zero.values), triv).holds);

    // A merely graded (non-subadditive, non-symmetric) function vanishing
    // and continuous at zero is still dominated by a synthesized norm.
    GradedFunction lumpy{{Dyadic::zero(), Dyadic::make(1, 2), Dyadic::one(), Dyadic::make(1, 1),
                          Dyadic::one(), Dyadic::one(), Dyadic::one(), Dyadic::make(1, 2)}};
    PseudoNorm dom = continuity_transfer(lumpy, f, pw, pw);
    CHECK(dom.kernel().subset_of(Subset::of(8, {0})));

    // A function whose small sublevels are not neighborhoods is rejected.
    ZeroFilter coarse(z8, {Subset::full_set(8), Subset::of(8, {0, 4})});
    GradedFunction bad;
    bad.values.assign(8, Dyadic::one());
    bad.values[0] = Dyadic::zero(); // kernel {0} misses the bottom set {0,4}
    CHECK_THROWS_AS(continuity_transfer(bad, coarse, pw, pw), Error);
}
