#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hulltop/gauge.hpp"
#include "hulltop/hull.hpp"
#include "hulltop/monoid.hpp"
#include "hulltop/pseudonorm.hpp"
#include "hulltop/zerofilter.hpp"

namespace hulltop {

// Line-oriented structure files. Sections open with "[type name]" and carry
// "key = value" lines; '#' starts a comment. Section types:
//
//   [monoid M]    kind = cyclic 8 | boolean_sym_diff n | boolean_join n |
//                        saturating_cube k d | product A B | explicit
//                 explicit tables: size, zero, row (one per table row),
//                 optional inverse, optional le (order generator pairs)
//   [hull Q]      monoid = M ; kind = powerset|lower-sets|full-sets|
//                        symmetric|submonoids|solid
//   [filter F]    monoid = M ; base = {0 1 7} {0} ...
//   [string S]    monoid = M ; prefix = {..} {..} ; tail = {..} ;
//                 optional hull = Q (validated against it)
//   [pnorm R]     monoid = M ; values = 0/1 1/2 ... (one per element)
//   [polytope P]  dim = d ; vertex = rationals (one line per vertex)
//   [witness]     replay metadata: check, plus object names (see cli)
//
// Unknown section types and unknown keys are rejected.
struct StructureFile {
    std::map<std::string, MonoidPtr> monoids;
    std::map<std::string, HullPtr> hulls;
    std::map<std::string, ZeroFilter> filters;
    std::map<std::string, QString> strings;
    std::map<std::string, PseudoNorm> pnorms;
    std::map<std::string, RationalPolytope> polytopes;
    std::map<std::string, std::string> witness; // key/value pairs of [witness]

    // Declaration order, as (type, name) pairs, for deterministic reports.
    std::vector<std::pair<std::string, std::string>> declared;

    // Validation side notes produced while loading (string-vs-hull checks).
    std::vector<std::string> notes;
};

// Throws Error with code ParseError for malformed input and the object's own
// validation error otherwise.
StructureFile parse_structure_file(std::istream& is);
StructureFile load_structure_file(const std::string& path);

// Serialization used for witness dumps; parses back to equal objects.
std::string serialize_subset(const Subset& s);
Subset parse_subset_token(const std::string& token, std::uint32_t carrier);

void write_monoid_section(std::ostream& os, const std::string& name, const FiniteCommMonoid& m);
void write_string_section(std::ostream& os, const std::string& name, const std::string& monoid_name,
                          const QString& s);
void write_filter_section(std::ostream& os, const std::string& name, const std::string& monoid_name,
                          const ZeroFilter& f);

} // namespace hulltop
