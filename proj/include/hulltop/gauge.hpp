#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hulltop/error.hpp"

namespace hulltop {

// All gauge arithmetic is exact over the rationals; there is no floating
// point and therefore no tolerance anywhere in this module.
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& r);

// Convex polytope in V-representation. The balanced flag is set when the
// vertex set is symmetric under negation, which makes the convex hull
// balanced.
class RationalPolytope {
public:
    static RationalPolytope make(unsigned dim, std::vector<RationalVector> vertices);

    unsigned dim() const { return dim_; }
    const std::vector<RationalVector>& vertices() const { return vertices_; }
    bool balanced() const { return balanced_; }

    // One vertex per line, coordinates as exact rationals "p/q" separated by
    // spaces.
    void print(std::ostream& os) const;
    static RationalPolytope parse(std::istream& is, unsigned dim_hint = 0);

private:
    RationalPolytope() = default;
    unsigned dim_ = 0;
    std::vector<RationalVector> vertices_;
    bool balanced_ = false;
};

struct GaugeValue {
    bool top = false;
    Rational value{};

    static GaugeValue at_top() {
        GaugeValue g;
        g.top = true;
        return g;
    }
    static GaugeValue of(Rational v) {
        GaugeValue g;
        g.value = std::move(v);
        return g;
    }
    bool operator==(const GaugeValue& o) const { return top == o.top && (top || value == o.value); }
    std::string str() const { return top ? "top" : format_rational(value); }
};

// Minkowski functional of a balanced polytope: the least r > 0 with x in rA,
// computed exactly by maximizing t >= 0 with t*x in conv(vertices) and
// inverting; top when x lies in no dilate.
GaugeValue gauge(const RationalPolytope& p, const RationalVector& x);

// Exact membership x in conv(vertices), decided by a feasibility LP. Both
// outcomes carry a certificate that is re-verified by direct arithmetic:
// convex weights when inside, a separating affine functional when outside.
struct MembershipResult {
    bool inside = false;
    std::vector<Rational> weights;   // inside: convex combination over vertices
    std::vector<Rational> separator; // outside: (y_1..y_d, y_0) with y.v + y_0 >= 0
                                     // on vertices and y.x + y_0 < 0
};
MembershipResult membership(const RationalPolytope& p, const RationalVector& x);

// Exact seminorm-law checks over a sample; a violated law is a
// falsification, not a test failure.
struct SeminormReport {
    std::size_t subadditivity_checks = 0;
    std::size_t homogeneity_checks = 0;
};
SeminormReport seminorm_axioms(const RationalPolytope& p,
                               const std::vector<std::pair<RationalVector, RationalVector>>& pairs,
                               const std::vector<Rational>& scalars);

// conv(U intersect -U) for a finite point set U; the result is balanced.
RationalPolytope symm_core(unsigned dim, const std::vector<RationalVector>& points);

// gauge(e join f) == max(gauge(e), gauge(f)) over a sample of non-negative
// vector pairs, joins taken coordinatewise.
bool is_M_seminorm(const RationalPolytope& p,
                   const std::vector<std::pair<RationalVector, RationalVector>>& pairs);

// Vertex set = pairwise concatenations; the hull of the product is the
// product of the hulls.
RationalPolytope product_polytope(const RationalPolytope& a, const RationalPolytope& b);

} // namespace hulltop
