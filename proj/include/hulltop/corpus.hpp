#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hulltop/boolfn.hpp"
#include "hulltop/gauge.hpp"
#include "hulltop/hull.hpp"
#include "hulltop/monoid.hpp"
#include "hulltop/pseudonorm.hpp"
#include "hulltop/zerofilter.hpp"

namespace hulltop {

// Pinned instances used by the unit tests, the property suites and the CLI
// suite runner. Everything here is deterministic.
namespace fixtures {

// Cyclic group of order 8 with the three-set neighborhood base
// {0,1,2,6,7} > {0,1,7} > {0}.
MonoidPtr z8();
std::vector<Subset> z8_base();
ZeroFilter z8_filter();
QString z8_string();
// Expected synthesized table for the string against the powerset.
std::vector<Dyadic> z8_expected();

// Boolean algebra on 3 atoms with the principal ideal of {atom 1}.
Subset bool3_ideal();

// Saturating chain {0,1,2,3} with the full-set hull and the string
// ({0,1,2},{0,1}; tail {0}).
MonoidPtr cube31();
QString cube31_string();
std::vector<Dyadic> cube31_expected();

// A five-element positively ordered monoid on which the lower-set hull is
// translation-invariant but not additive: elements 0 < a < t < s and
// 0 < b < s with b incomparable to a and t; a+a = t, every other nonzero
// sum is s. The pinned string makes one mixed level set non-lower, so the
// regularized pseudo-norm drops strictly below the powerset one at b.
MonoidPtr pinch();
QString pinch_string();
std::vector<Dyadic> pinch_rho_hat();  // powerset synthesis
std::vector<Dyadic> pinch_theta();    // lower-set regularization

} // namespace fixtures

// Seeded random instance generators. All randomness flows from the
// engine the caller passes in, so a (seed, index) pair replays an instance.
namespace corpus {

struct MonoidChoice {
    MonoidPtr monoid;
    std::string description;
};

// Random monoid with carrier at most max_carrier: cyclic groups, Boolean
// sym-diff groups, saturating cubes, and small products.
MonoidChoice random_monoid(std::mt19937_64& rng, std::uint32_t max_carrier);

// Hull structures available on the monoid, with capability certificates
// attached: powerset always; lower/full sets when ordered; symmetric sets
// and submonoids on groups.
std::vector<HullPtr> hulls_for(const MonoidPtr& m, std::mt19937_64& rng);

// Random valid H-string built tail-first: saturate a random member into a
// tail, then grow the prefix outward by closing sums plus random elements.
QString random_string(const MonoidPtr& m, const HullStructure& h, std::mt19937_64& rng,
                      std::uint32_t max_prefix = 4);

// Filter whose base is the string's prefix plus tail.
ZeroFilter filter_from_string(const QString& s);

// Random graded function with values on the dyadic grid 2^-grid_exp.
GradedFunction random_graded(std::uint32_t size, unsigned grid_exp, std::mt19937_64& rng);

// Random balanced polytope: a handful of random rational points and their
// negations.
RationalPolytope random_balanced_polytope(unsigned dim, std::mt19937_64& rng);

RationalVector random_point(unsigned dim, std::mt19937_64& rng, int span = 4);

} // namespace corpus

} // namespace hulltop
