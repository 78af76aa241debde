#include "hulltop/dyadic.hpp"

#include <sstream>

namespace hulltop {

std::string Dyadic::str() const {
    if (top_) return "top";
    std::ostringstream os;
    os << num_ << '/' << (std::uint64_t(1) << exp_);
    return os.str();
}

Dyadic Dyadic::parse(const std::string& s) {
    if (s == "top") return top();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            // Bare integer.
            std::uint64_t n = std::stoull(s);
            return make(n, 0);
        }
        std::uint64_t n = std::stoull(s.substr(0, slash));
        std::uint64_t d = std::stoull(s.substr(slash + 1));
        if (d == 0 || (d & (d - 1)) != 0)
            throw Error(Err::ParseError, "dyadic denominator must be a power of two: " + s);
        unsigned e = 0;
        while ((d >> e) != 1) ++e;
        return make(n, e);
    } catch (const std::invalid_argument&) {
        throw Error(Err::ParseError, "bad dyadic: " + s);
    } catch (const std::out_of_range&) {
        throw Error(Err::ParseError, "dyadic out of range: " + s);
    }
}

const char* err_name(Err e) {
    switch (e) {
        case Err::NotOneAlgebraic: return "NotOneAlgebraic";
        case Err::MissingContext: return "MissingContext";
        case Err::InvalidTable: return "InvalidTable";
        case Err::MissingInverse: return "MissingInverse";
        case Err::NotDirected: return "NotDirected";
        case Err::NoHalvingSet: return "NoHalvingSet";
        case Err::NotAGroup: return "NotAGroup";
        case Err::NotQBase: return "NotQBase";
        case Err::NotInFilter: return "NotInFilter";
        case Err::OffGrid: return "OffGrid";
        case Err::NotAdditive: return "NotAdditive";
        case Err::InvalidString: return "InvalidString";
        case Err::NotTranslationInvariant: return "NotTranslationInvariant";
        case Err::NotBasic: return "NotBasic";
        case Err::EmptyList: return "EmptyList";
        case Err::MixedMonoids: return "MixedMonoids";
        case Err::NotSymmetric: return "NotSymmetric";
        case Err::NotContinuousAtZero: return "NotContinuousAtZero";
        case Err::NotEnhancible: return "NotEnhancible";
        case Err::SizeOutOfRange: return "SizeOutOfRange";
        case Err::NotAnIdeal: return "NotAnIdeal";
        case Err::DimensionMismatch: return "DimensionMismatch";
        case Err::NotBalanced: return "NotBalanced";
        case Err::EmptyCore: return "EmptyCore";
        case Err::ParseError: return "ParseError";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace hulltop
