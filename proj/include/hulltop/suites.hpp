#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hulltop::suites {

struct Options {
    std::uint32_t corpus_size = 200;
    std::uint64_t seed = 1;
    std::uint32_t max_carrier = 64;
    std::string witness_dir = ".";
    std::string mutate; // mutation id, empty for none
    // Restrict the run to suites whose name starts with this prefix
    // (empty = all). Used by the acceptance runner to time criteria
    // individually.
    std::string only;
};

struct Line {
    std::string name;
    std::uint32_t instances = 0;
    std::uint32_t failures = 0;
    std::string note;
};

struct Outcome {
    std::vector<Line> lines; // sorted by suite name
    std::vector<std::string> witness_files;
    bool falsified = false;
};

// Runs every property suite over freshly generated corpora plus the pinned
// fixtures. Deterministic for a fixed option set.
Outcome run_all(const Options& opt);

// Documented single-entry mutations of the pinned fixtures; each one must
// drive run_all into a falsification.
std::vector<std::string> mutation_ids();

// Re-runs the check recorded in a witness file; true when the original
// failure reproduces.
bool replay_witness(const std::string& path);

} // namespace hulltop::suites
