#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hulltop/dyadic.hpp"
#include "hulltop/hull.hpp"
#include "hulltop/monoid.hpp"
#include "hulltop/pseudonorm.hpp"
#include "hulltop/zerofilter.hpp"

namespace hulltop {

// The Boolean algebra 2^{1..n} with both monoid views over the same element
// indexing (the element index is the atom bitmask): the symmetric-difference
// group and the join monoid, plus the lower-set hull structure for the
// inclusion order.
class BooleanAlgebra {
public:
    static BooleanAlgebra make(std::uint32_t atoms); // 1 <= atoms <= 10

    std::uint32_t atoms() const { return atoms_; }
    std::uint32_t element_count() const { return 1u << atoms_; }

    const MonoidPtr& sym_diff() const { return sym_diff_; }
    const MonoidPtr& join() const { return join_; }
    const HullPtr& lower() const { return lower_; }

    std::uint32_t meet_op(std::uint32_t a, std::uint32_t b) const { return a & b; }
    std::uint32_t join_op(std::uint32_t a, std::uint32_t b) const { return a | b; }
    std::uint32_t diff_op(std::uint32_t a, std::uint32_t b) const { return a & ~b & mask_; }
    std::uint32_t complement_op(std::uint32_t a) const { return mask_ ^ a; }
    bool leq(std::uint32_t a, std::uint32_t b) const { return (a & b) == a; }

    // "<atom-bitmask-binary> <num>/<2^k>" per line, sorted by element index.
    std::string format_table(const std::vector<Dyadic>& mu) const;

private:
    BooleanAlgebra() = default;
    std::uint32_t atoms_ = 0;
    std::uint32_t mask_ = 0;
    MonoidPtr sym_diff_;
    MonoidPtr join_;
    HullPtr lower_;
};

struct SubmeasureCheck {
    bool ok = true;
    std::string witness;
    explicit operator bool() const { return ok; }
};

// mu is a submeasure iff mu(bottom) = 0, mu is order preserving, and
// mu(l join m) <= mu(l) + mu(m); all three exhaustively.
SubmeasureCheck is_submeasure(const BooleanAlgebra& ba, const std::vector<Dyadic>& mu);

struct SubmeasureEquivReport {
    bool submeasure = false;          // direct submeasure axioms
    bool delta_pseudo_norm = false;   // subadditive over sym-diff + lower continuous
    std::string witness_submeasure;
    std::string witness_delta;
    std::vector<std::string> bridge; // derivation log, filled on request
};

// Evaluates both characterizations independently and asserts they agree.
// Disagreement is a falsification.
SubmeasureEquivReport submeasure_equiv(const BooleanAlgebra& ba, const std::vector<Dyadic>& mu,
                                       bool log_bridge = false);

// Filter over the sym-diff group with base {ideal}. The argument must be a
// lower set closed under symmetric difference.
ZeroFilter fn_filter_from_ideal(const BooleanAlgebra& ba, const Subset& ideal);

struct FnReport {
    bool group_lower_filter = false;   // (i)  group filter with a lower-set base
    bool join_view_filter = false;     // (ii) join-view filter + relative complements
    bool generated_by_submeasures = false; // (iii) synthesis + round trip
    std::string detail_i, detail_ii, detail_iii;
    std::optional<PseudoNorm> synthesized;

    bool all_agree() const {
        return group_lower_filter == join_view_filter && join_view_filter == generated_by_submeasures;
    }
};

// Evaluates the three characterizations of a Frechet-Nikodym style filter
// independently and asserts all-or-none agreement; a mixed outcome is a
// falsification.
FnReport fn_equivalence_suite(const BooleanAlgebra& ba, const ZeroFilter& f);

// (a sym-diff b) join (c sym-diff d) contains (a join c) sym-diff (b join d):
// a Boolean identity, so checking all 16 combinations of one atom's bits
// decides it for every Boolean algebra.
bool lattice_inequality_atomwise();
// The same inequality by direct enumeration of quadruples; atoms <= 4.
bool lattice_inequality_bruteforce(const BooleanAlgebra& ba);

} // namespace hulltop
