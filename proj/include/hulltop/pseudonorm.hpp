#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "hulltop/dyadic.hpp"
#include "hulltop/hull.hpp"
#include "hulltop/monoid.hpp"

namespace hulltop {

// Finite form of a string of neighborhoods: a prefix U_0 >= U_1 >= ... plus a
// constant tail T, encoding the infinite sequence that repeats T from the end
// of the prefix onwards. Invariants (checked at construction):
//   - every entry and the tail contain zero,
//   - U_n + U_n is contained in U_{n-1},
//   - T + T is contained in T, and T is contained in the last prefix entry.
// Together with 0 in T this forces T + T = T, so the extension by T is again
// a valid string.
class QString {
public:
    QString(MonoidPtr m, std::vector<Subset> prefix, Subset tail);

    const MonoidPtr& monoid() const { return monoid_; }
    const std::vector<Subset>& prefix() const { return prefix_; }
    const Subset& tail() const { return tail_; }

    // U_n with the tail extension.
    const Subset& at(std::size_t n) const { return n < prefix_.size() ? prefix_[n] : tail_; }
    std::size_t prefix_length() const { return prefix_.size(); }

private:
    MonoidPtr monoid_;
    std::vector<Subset> prefix_;
    Subset tail_;
};

struct StringCert {
    bool ok = true;
    std::string witness;
    explicit operator bool() const { return ok; }
};

// Checks the QString invariants plus membership of every entry and the tail
// in H. Never throws; the certificate carries the witness.
StringCert validate_string(const MonoidPtr& m, const HullStructure& h, const QString& s);

// A [0,1]-valued pseudo-norm: rho(0) = 0 and rho(f+g) <= rho(f) + rho(g),
// both checked exhaustively at construction.
class PseudoNorm {
public:
    PseudoNorm(MonoidPtr m, std::vector<Dyadic> values);

    const MonoidPtr& monoid() const { return monoid_; }
    const std::vector<Dyadic>& values() const { return values_; }
    const Dyadic& value(std::uint32_t g) const { return values_[g]; }

    Subset kernel() const;
    Subset sublevel(const Dyadic& r) const;       // rho^{-1}[0, r]
    Subset strict_sublevel(const Dyadic& r) const; // rho^{-1}[0, r)
    GradedFunction graded() const { return GradedFunction{values_}; }

    bool symmetric_flag() const { return symmetric_; }
    void set_symmetric_flag() { symmetric_ = true; }
    const std::set<std::string>& lower_continuous_against() const { return lower_cont_; }
    void add_lower_continuity(const std::string& hull_name) { lower_cont_.insert(hull_name); }
    void set_lower_continuity(std::set<std::string> names) { lower_cont_ = std::move(names); }

    // One line per element: "<element-index> <numerator>/<2^k>", sorted by
    // element index.
    void print_table(std::ostream& os) const;

private:
    MonoidPtr monoid_;
    std::vector<Dyadic> values_;
    bool symmetric_ = false;
    std::set<std::string> lower_cont_;
};

} // namespace hulltop
