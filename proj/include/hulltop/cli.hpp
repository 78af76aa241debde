#pragma once

#include <iosfwd>
#include <string>

#include "hulltop/suites.hpp"

namespace hulltop::cli {

// Exit codes shared by every subcommand:
//   0 success, 1 parse error, 2 validation failure, 3 precondition failure,
//   4 falsification.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitFalsified = 4;

// Parses and validates every declared object; the report lists each object
// and every certificate with its tag.
int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);

struct SynthArgs {
    std::string path;
    std::string string_name;
    std::string hull_name;  // Q
    std::string basic_name; // R
    unsigned grid = 0;      // 0 = prefix length
};

// Runs the synthesis pipeline over objects declared in the file and prints
// the pseudo-norm table followed by a "# sandwich-verified" trailer.
int cmd_synth(const SynthArgs& args, std::ostream& out, std::ostream& err);

struct SuiteArgs {
    suites::Options options;
    std::string replay; // witness file; when set, replays it instead
};

// Runs the property suites (or replays a witness) and prints one line per
// suite. Any falsification exits 4 and leaves a replayable witness file.
int cmd_suite(const SuiteArgs& args, std::ostream& out, std::ostream& err);

} // namespace hulltop::cli
