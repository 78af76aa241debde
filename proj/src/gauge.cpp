#include "hulltop/gauge.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace hulltop {

Rational parse_rational(const std::string& s) {
    boost::multiprecision::cpp_int num, den = 1;
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            num = boost::multiprecision::cpp_int(s);
        } else {
            num = boost::multiprecision::cpp_int(s.substr(0, slash));
            den = boost::multiprecision::cpp_int(s.substr(slash + 1));
        }
    } catch (const std::runtime_error&) {
        throw Error(Err::ParseError, "bad rational '" + s + "'");
    }
    if (den == 0) throw Error(Err::ParseError, "zero denominator in " + s);
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1) os << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

RationalPolytope RationalPolytope::make(unsigned dim, std::vector<RationalVector> vertices) {
    if (dim < 1 || dim > 4) throw Error(Err::DimensionMismatch, "dimension must be 1..4");
    if (vertices.empty()) throw Error(Err::EmptyCore, "polytope needs at least one vertex");
    for (const auto& v : vertices)
        if (v.size() != dim) throw Error(Err::DimensionMismatch, "vertex arity mismatch");
    RationalPolytope p;
    p.dim_ = dim;
    p.vertices_ = std::move(vertices);
    std::set<RationalVector> vs(p.vertices_.begin(), p.vertices_.end());
    p.balanced_ = true;
    for (const auto& v : vs) {
        RationalVector neg(dim);
        for (unsigned i = 0; i < dim; ++i) neg[i] = -v[i];
        if (!vs.count(neg)) {
            p.balanced_ = false;
            break;
        }
    }
    return p;
}

void RationalPolytope::print(std::ostream& os) const {
    for (const auto& v : vertices_) {
        for (unsigned i = 0; i < dim_; ++i) {
            if (i) os << ' ';
            os << format_rational(v[i]);
        }
        os << '\n';
    }
}

RationalPolytope RationalPolytope::parse(std::istream& is, unsigned dim_hint) {
    std::vector<RationalVector> verts;
    std::string line;
    unsigned dim = dim_hint;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        RationalVector v;
        std::string tok;
        while (ls >> tok) v.push_back(parse_rational(tok));
        if (v.empty()) continue;
        if (dim == 0) dim = static_cast<unsigned>(v.size());
        verts.push_back(std::move(v));
    }
    return make(dim, std::move(verts));
}

// --- Exact two-phase simplex -------------------------------------------------
namespace lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
    Status status = Status::optimal;
    Rational objective{};
    std::vector<Rational> solution; // primal values of the structural variables
    std::vector<Rational> farkas;   // infeasible case: y with y.A_j >= 0 for
                                    // all columns and y.b < 0
};

// max c.z  s.t.  A z = b, z >= 0. Bland's rule throughout, so the method
// terminates; all arithmetic exact.
Result solve_max(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                 std::vector<Rational> c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < m; ++i)
        if (b[i] < 0) {
            for (auto& e : a[i]) e = -e;
            b[i] = -b[i];
        }

    const std::size_t total = n + m; // structural + artificial
    // tableau rows 0..m-1: constraints; row m: reduced costs; col total: rhs.
    std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(total + 1, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][total] = b[i];
        basis[i] = n + i;
    }

    auto pivot = [&](std::size_t pr, std::size_t pc) {
        Rational d = t[pr][pc];
        for (auto& e : t[pr]) e /= d;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == pr) continue;
            Rational f = t[i][pc];
            if (f == 0) continue;
            for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[pr][j];
        }
        basis[pr] = pc;
    };

    auto run = [&](std::size_t col_limit) -> Status {
        for (;;) {
            std::size_t pc = total;
            for (std::size_t j = 0; j < col_limit; ++j)
                if (t[m][j] > 0) {
                    pc = j;
                    break;
                }
            if (pc == total) return Status::optimal;
            std::size_t pr = m;
            for (std::size_t i = 0; i < m; ++i) {
                if (t[i][pc] <= 0) continue;
                if (pr == m) {
                    pr = i;
                    continue;
                }
                Rational cur = t[i][total] / t[i][pc];
                Rational best = t[pr][total] / t[pr][pc];
                if (cur < best || (cur == best && basis[i] < basis[pr])) pr = i;
            }
            if (pr == m) return Status::unbounded;
            pivot(pr, pc);
        }
    };

    // Phase 1: maximize -sum(artificials); reduced costs start as the column
    // sums of the constraint rows.
    for (std::size_t j = 0; j <= total; ++j) {
        Rational s(0);
        for (std::size_t i = 0; i < m; ++i) s += t[i][j];
        t[m][j] = s;
    }
    for (std::size_t i = 0; i < m; ++i) t[m][n + i] = 0;
    run(n); // artificials never need to re-enter
    Result res;
    if (t[m][total] > 0) {
        res.status = Status::infeasible;
        // Row multipliers read off the artificial columns: the reduced cost
        // of artificial i is -1 - y_i, so y_i = -(1 + r_{n+i}). This y has
        // y.A_j >= 0 for every structural column and y.b < 0.
        res.farkas.resize(m);
        for (std::size_t i = 0; i < m; ++i) res.farkas[i] = -(t[m][n + i] + 1);
        return res;
    }

    // Drive any artificial still basic (at value 0) out of the basis.
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) continue;
        std::size_t pc = total;
        for (std::size_t j = 0; j < n; ++j)
            if (t[i][j] != 0) {
                pc = j;
                break;
            }
        if (pc != total) pivot(i, pc);
        // Otherwise the row is redundant; the artificial stays basic at 0.
    }

    // Phase 2.
    for (std::size_t j = 0; j <= total; ++j) t[m][j] = (j < n) ? c[j] : Rational(0);
    t[m][total] = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] >= n) continue;
        Rational f = t[m][basis[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j <= total; ++j) t[m][j] -= f * t[i][j];
    }
    Status st = run(n);
    if (st == Status::unbounded) {
        res.status = Status::unbounded;
        return res;
    }
    res.status = Status::optimal;
    res.objective = -t[m][total];
    res.solution.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) res.solution[basis[i]] = t[i][total];
    return res;
}

} // namespace lp

namespace {

void check_dim(const RationalPolytope& p, const RationalVector& x) {
    if (x.size() != p.dim()) throw Error(Err::DimensionMismatch, "point arity mismatch");
}

bool is_zero_vec(const RationalVector& x) {
    for (const auto& e : x)
        if (e != 0) return false;
    return true;
}

RationalVector join_vec(const RationalVector& a, const RationalVector& b) {
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

} // namespace

GaugeValue gauge(const RationalPolytope& p, const RationalVector& x) {
    if (!p.balanced()) throw Error(Err::NotBalanced, "gauge needs a balanced polytope");
    check_dim(p, x);
    if (is_zero_vec(x)) return GaugeValue::of(Rational(0));

    // max t subject to sum(l_i v_i) - t x = 0, sum(l_i) = 1, l >= 0, t >= 0.
    const std::size_t mverts = p.vertices().size();
    const unsigned d = p.dim();
    std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(mverts + 1, Rational(0)));
    std::vector<Rational> b(d + 1, Rational(0));
    std::vector<Rational> c(mverts + 1, Rational(0));
    for (unsigned row = 0; row < d; ++row) {
        for (std::size_t j = 0; j < mverts; ++j) a[row][j] = p.vertices()[j][row];
        a[row][mverts] = -x[row];
    }
    for (std::size_t j = 0; j < mverts; ++j) a[d][j] = 1;
    b[d] = 1;
    c[mverts] = 1;

    auto res = lp::solve_max(a, b, c);
    // Balanced and nonempty forces the origin inside, and a bounded hull
    // bounds the dilation of any nonzero point.
    if (res.status != lp::Status::optimal)
        throw Error(Err::Internal, "gauge LP neither bounded nor feasible");
    if (res.objective == 0) return GaugeValue::at_top();
    return GaugeValue::of(Rational(1) / res.objective);
}

MembershipResult membership(const RationalPolytope& p, const RationalVector& x) {
    check_dim(p, x);
    const std::size_t mverts = p.vertices().size();
    const unsigned d = p.dim();
    std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(mverts, Rational(0)));
    std::vector<Rational> b(d + 1, Rational(0));
    std::vector<Rational> c(mverts, Rational(0));
    for (unsigned row = 0; row < d; ++row) {
        for (std::size_t j = 0; j < mverts; ++j) a[row][j] = p.vertices()[j][row];
        b[row] = x[row];
    }
    for (std::size_t j = 0; j < mverts; ++j) a[d][j] = 1;
    b[d] = 1;

    // Signs of b get normalized inside the solver; rebuild the certificate
    // against the original rows, so flip y entries for flipped rows.
    std::vector<int> flip(d + 1, 1);
    for (unsigned row = 0; row <= d; ++row)
        if (b[row] < 0) flip[row] = -1;

    auto res = lp::solve_max(a, b, c);
    MembershipResult out;
    if (res.status == lp::Status::optimal) {
        out.inside = true;
        out.weights = res.solution;
        // Verify the certificate directly.
        Rational sum(0);
        RationalVector combo(d, Rational(0));
        for (std::size_t j = 0; j < mverts; ++j) {
            if (res.solution[j] < 0) throw Error(Err::Internal, "negative weight in membership witness");
            sum += res.solution[j];
            for (unsigned row = 0; row < d; ++row) combo[row] += res.solution[j] * p.vertices()[j][row];
        }
        if (sum != 1 || combo != x) throw Error(Err::Internal, "membership certificate failed");
        return out;
    }
    if (res.status != lp::Status::infeasible)
        throw Error(Err::Internal, "membership LP neither optimal nor infeasible");
    out.inside = false;
    out.separator.resize(d + 1);
    for (unsigned row = 0; row <= d; ++row) out.separator[row] = res.farkas[row] * flip[row];
    // Farkas verification: y.A_j >= 0 on every vertex column, y.b < 0.
    const auto& y = out.separator;
    for (std::size_t j = 0; j < mverts; ++j) {
        Rational v = y[d];
        for (unsigned row = 0; row < d; ++row) v += y[row] * p.vertices()[j][row];
        if (v < 0) throw Error(Err::Internal, "separator fails on a vertex");
    }
    Rational at_x = y[d];
    for (unsigned row = 0; row < d; ++row) at_x += y[row] * x[row];
    if (at_x >= 0) throw Error(Err::Internal, "separator fails at the query point");
    return out;
}

SeminormReport seminorm_axioms(const RationalPolytope& p,
                               const std::vector<std::pair<RationalVector, RationalVector>>& pairs,
                               const std::vector<Rational>& scalars) {
    if (!p.balanced()) throw Error(Err::NotBalanced, "seminorm axioms need a balanced polytope");
    SeminormReport rep;
    for (const auto& [x, y] : pairs) {
        GaugeValue gx = gauge(p, x), gy = gauge(p, y);
        RationalVector s(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
        GaugeValue gs = gauge(p, s);
        bool ok;
        if (gx.top || gy.top)
            ok = true; // anything <= top
        else if (gs.top)
            ok = false;
        else
            ok = gs.value <= gx.value + gy.value;
        if (!ok)
            throw Falsification("SubadditivityViolation", "gauge(x+y) > gauge(x) + gauge(y)",
                                "x, y in dimension " + std::to_string(p.dim()));
        ++rep.subadditivity_checks;
    }
    for (const auto& [x, y] : pairs) {
        for (const auto& s : scalars) {
            RationalVector sx(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) sx[i] = s * x[i];
            GaugeValue gx = gauge(p, x);
            GaugeValue gsx = gauge(p, sx);
            Rational abs_s = s < 0 ? Rational(-s) : s;
            bool ok;
            if (abs_s == 0)
                ok = !gsx.top && gsx.value == 0;
            else if (gx.top)
                ok = gsx.top;
            else
                ok = !gsx.top && gsx.value == abs_s * gx.value;
            if (!ok)
                throw Falsification("HomogeneityViolation", "gauge(s*x) != |s| * gauge(x)",
                                    "scalar " + format_rational(s));
            ++rep.homogeneity_checks;
        }
    }
    return rep;
}

RationalPolytope symm_core(unsigned dim, const std::vector<RationalVector>& points) {
    std::set<RationalVector> set(points.begin(), points.end());
    std::vector<RationalVector> core;
    for (const auto& v : set) {
        RationalVector neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        if (set.count(neg)) core.push_back(v);
    }
    if (core.empty()) throw Error(Err::EmptyCore, "no symmetric pair in the point set");
    return RationalPolytope::make(dim, std::move(core));
}

bool is_M_seminorm(const RationalPolytope& p,
                   const std::vector<std::pair<RationalVector, RationalVector>>& pairs) {
    for (const auto& [e, f] : pairs) {
        GaugeValue ge = gauge(p, e), gf = gauge(p, f);
        GaugeValue gj = gauge(p, join_vec(e, f));
        GaugeValue expect = (ge.top || gf.top)
                                ? GaugeValue::at_top()
                                : GaugeValue::of(std::max(ge.value, gf.value));
        if (!(gj == expect)) return false;
    }
    return true;
}

RationalPolytope product_polytope(const RationalPolytope& a, const RationalPolytope& b) {
    std::vector<RationalVector> verts;
    for (const auto& va : a.vertices())
        for (const auto& vb : b.vertices()) {
            RationalVector v = va;
            v.insert(v.end(), vb.begin(), vb.end());
            verts.push_back(std::move(v));
        }
    return RationalPolytope::make(a.dim() + b.dim(), std::move(verts));
}

} // namespace hulltop
