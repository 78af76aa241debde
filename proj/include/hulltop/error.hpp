#pragma once

#include <stdexcept>
#include <string>

namespace hulltop {

// Precondition / validation failures. Each code matches one documented
// error condition of the public API.
enum class Err {
    NotOneAlgebraic,
    MissingContext,
    InvalidTable,
    MissingInverse,
    NotDirected,
    NoHalvingSet,
    NotAGroup,
    NotQBase,
    NotInFilter,
    OffGrid,
    NotAdditive,
    InvalidString,
    NotTranslationInvariant,
    NotBasic,
    EmptyList,
    MixedMonoids,
    NotSymmetric,
    NotContinuousAtZero,
    NotEnhancible,
    SizeOutOfRange,
    NotAnIdeal,
    DimensionMismatch,
    NotBalanced,
    EmptyCore,
    ParseError,
    Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

// A falsification is not a recoverable error: it means a certified instance
// violated a property that the construction guarantees. The witness text is
// a replayable instance dump.
class Falsification : public std::runtime_error {
public:
    Falsification(const std::string& kind, const std::string& msg, std::string witness)
        : std::runtime_error(kind + ": " + msg), kind_(kind), witness_(std::move(witness)) {}

    const std::string& kind() const { return kind_; }
    const std::string& witness() const { return witness_; }

private:
    std::string kind_;
    std::string witness_;
};

} // namespace hulltop
