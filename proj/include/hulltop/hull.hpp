#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hulltop/dyadic.hpp"
#include "hulltop/monoid.hpp"
#include "hulltop/subset.hpp"

namespace hulltop {

// How a capability claim was established. Subsets are enumerated fully for
// carriers up to the exhaustive thresholds, sampled (with recorded seed and
// sample count) above; by_construction marks claims that hold by the way the
// structure was built.
enum class CertTag { by_construction, exhaustive, sampled };

enum class Capability { one_algebraic, additive, translation_invariant, symmetric };

const char* capability_name(Capability c);
const char* cert_tag_name(CertTag t);

struct Certificate {
    Capability cap;
    CertTag tag = CertTag::exhaustive;
    bool holds = true;
    std::string witness; // populated when holds == false
    std::uint64_t seed = 0;
    std::uint32_t samples = 0;
};

// Shared result shape for yes/no checks that carry a witness.
struct CheckResult {
    bool holds = true;
    CertTag tag = CertTag::exhaustive;
    std::string witness;
    std::uint64_t seed = 0;
    std::uint32_t samples = 0;
    explicit operator bool() const { return holds; }
};

// A hull structure is represented intensionally by its closure operator:
// an extensive, monotone, idempotent map on subsets of the carrier. Its
// fixed-point family is automatically closed under arbitrary intersections
// and contains the carrier, so the family itself is never materialized.
class HullStructure {
public:
    using ClosureFn = std::function<Subset(const Subset&)>;

    HullStructure(std::string name, std::uint32_t size, std::uint32_t zero, ClosureFn cl);

    const std::string& name() const { return name_; }
    std::uint32_t carrier_size() const { return size_; }
    std::uint32_t zero() const { return zero_; }

    Subset close(const Subset& a) const;
    bool is_member(const Subset& a) const { return close(a) == a; }

    // Core operator: the largest member contained in A. Requires a
    // 1-algebraic certificate, since only then is the union of members a
    // member.
    Subset core(const Subset& a) const;

    // Point closure cl({x}); cached.
    const Subset& point_closure(std::uint32_t x) const;

    bool has_certificate(Capability c) const;
    // Certificate present and positive.
    bool certified(Capability c) const;
    const Certificate* certificate(Capability c) const;
    void attach(Certificate cert);

    std::vector<Certificate> certificates() const;

private:
    std::string name_;
    std::uint32_t size_;
    std::uint32_t zero_;
    ClosureFn cl_;
    std::map<Capability, Certificate> certs_;
    mutable std::vector<std::optional<Subset>> point_closures_;
};

using HullPtr = std::shared_ptr<HullStructure>;

// Total function carrier -> [0, top] in exact dyadics.
struct GradedFunction {
    std::vector<Dyadic> values;

    std::uint32_t size() const { return static_cast<std::uint32_t>(values.size()); }
    // f^{-1}[0, r]
    Subset sublevel(const Dyadic& r) const;
    // Attained values, sorted ascending, deduplicated.
    std::vector<Dyadic> value_grid() const;
};

// --- Constructors -----------------------------------------------------------

HullPtr make_powerset(std::uint32_t size, std::uint32_t zero);
HullPtr make_lower_sets(const PartialOrder& order, std::uint32_t zero);
HullPtr make_full_sets(const PartialOrder& order, std::uint32_t zero);
// Members are the symmetric sets A = -A of a group.
HullPtr make_symmetric_sets(const MonoidPtr& m);
// Members are the submonoids (closed under +, containing the unit).
HullPtr make_submonoids(const MonoidPtr& m);
// Solid sets on a positively ordered monoid (zero is the least element);
// there they coincide with lower sets. Additivity is certified per instance.
HullPtr make_solid_sets(const MonoidPtr& m);
// Intersection-closure of an explicit member family (plus the carrier).
HullPtr make_from_members(std::string name, std::uint32_t size, std::uint32_t zero,
                          std::vector<Subset> members);
// Dispatcher used by the structure-file front end. kind is one of
// powerset | lower-sets | full-sets | symmetric | submonoids | solid.
HullPtr make_builtin(const std::string& kind, const MonoidPtr& m);

// --- Operations -------------------------------------------------------------

// Checks cl(A) == union of cl({x}) for x in A: exhaustive over all subsets
// for carriers <= 16, sampled above. Attaches the certificate to H.
Certificate certify_one_algebraic(HullStructure& h, std::uint64_t seed = 1,
                                  std::uint32_t samples = 2000);

// Certifies additivity / translation invariance / symmetry of the member
// family against the monoid structure. Member pairs are enumerated fully
// when the member count is <= 4096 (carrier <= 16), sampled otherwise.
std::vector<Certificate> hull_capabilities(const MonoidPtr& m, HullStructure& h,
                                           std::uint64_t seed = 1);

struct LowerContinuity {
    bool holds = true;
    Dyadic failing_r;
    Subset witness; // the sublevel set that is not a member
    explicit operator bool() const { return holds; }
};

// f is lower H-continuous iff every sublevel set f^{-1}[0,r] is a member.
// Sublevel sets only change at attained values, so those (plus 0) are the
// only r that need checking.
LowerContinuity is_lower_continuous(const HullStructure& h, const GradedFunction& f);

// f_H(x) = max of f over cl({x}); the least lower-H-continuous function
// above f when H is 1-algebraic. Requires the 1-algebraic certificate.
GradedFunction upper_regularize(const HullStructure& h, const GradedFunction& f);

// theta(x) = min { r in grid(f) + {0} : x in cl(f^{-1}[0,r]) }, top if none;
// the greatest lower-H-continuous function below f.
GradedFunction lower_regularize(const HullStructure& h, const GradedFunction& f);

// Q is R-enhancible when for every member Q0 of Q containing the base point,
// the R-core of Q0 still contains the base point and is a member of Q.
// Members are enumerated exhaustively for carriers <= 12, sampled above.
CheckResult is_enhancible(const HullStructure& q, const HullStructure& r, std::uint64_t seed = 1,
                          std::uint32_t samples = 500);

// The hull structure whose members are the common members of Q and R;
// closure = iterate cl_R . cl_Q to the fixed point. Capabilities certified
// for both inputs propagate.
HullPtr intersect(const HullPtr& q, const HullPtr& r);

// Enumerate the member family. Exhaustive scan over all subsets; only legal
// for carriers <= 16. Sorted, deduplicated.
std::vector<Subset> enumerate_members(const HullStructure& h);

} // namespace hulltop
