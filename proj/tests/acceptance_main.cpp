// Acceptance runner: executes each acceptance criterion at its stated
// bounds, printing one pass/fail line per criterion. Exit code is the number
// of failed criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "hulltop/suites.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    int number;
    std::string description;
    bool passed;
    double seconds;
    std::string detail;
};

std::vector<Criterion> g_results;

void report(int number, const std::string& description, bool passed, double seconds,
            const std::string& detail = "") {
    g_results.push_back({number, description, passed, seconds, detail});
    std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", passed ? "PASS" : "FAIL", number,
                description.c_str(), seconds, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

struct SuiteExpectation {
    std::string prefix;
    std::uint32_t min_instances;
};

// Runs the named suites and checks failure-freeness, instance floors and the
// wall-clock budget.
void run_criterion(int number, const std::string& description,
                   const std::vector<SuiteExpectation>& expectations, double budget_seconds,
                   std::uint32_t corpus_size, const std::string& witness_dir) {
    auto start = Clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& exp : expectations) {
        hulltop::suites::Options opt;
        opt.corpus_size = corpus_size;
        opt.seed = 1;
        opt.max_carrier = 64;
        opt.witness_dir = witness_dir;
        opt.only = exp.prefix;
        auto outcome = hulltop::suites::run_all(opt);
        std::uint32_t instances = 0;
        for (const auto& line : outcome.lines) {
            instances += line.instances;
            if (line.failures > 0) {
                ok = false;
                detail = line.name + ": " + line.note;
            }
        }
        if (instances < exp.min_instances) {
            ok = false;
            detail = exp.prefix + " ran only " + std::to_string(instances) + " instances (need " +
                     std::to_string(exp.min_instances) + ")";
        }
        if (outcome.falsified) ok = false;
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed >= budget_seconds) {
        ok = false;
        detail = "over the " + std::to_string(budget_seconds) + "s budget";
    }
    report(number, description, ok, elapsed, detail);
}

void run_mutation_criterion(const std::string& witness_dir) {
    auto start = Clock::now();
    bool ok = true;
    std::string detail;
    auto ids = hulltop::suites::mutation_ids();
    if (ids.size() < 5) {
        ok = false;
        detail = "fewer than 5 documented mutations";
    }
    for (const auto& id : ids) {
        hulltop::suites::Options opt;
        opt.corpus_size = 0;
        opt.seed = 1;
        opt.witness_dir = witness_dir;
        opt.only = "pinned";
        opt.mutate = id;
        auto outcome = hulltop::suites::run_all(opt);
        if (!outcome.falsified || outcome.witness_files.empty()) {
            ok = false;
            detail = "mutation " + id + " did not falsify with a witness";
            continue;
        }
        if (!hulltop::suites::replay_witness(outcome.witness_files.front())) {
            ok = false;
            detail = "witness for " + id + " did not replay";
        }
    }
    // The unmutated fixtures must stay green.
    {
        hulltop::suites::Options opt;
        opt.corpus_size = 0;
        opt.seed = 1;
        opt.witness_dir = witness_dir;
        opt.only = "pinned";
        auto outcome = hulltop::suites::run_all(opt);
        if (outcome.falsified) {
            ok = false;
            detail = "pinned fixtures fail without mutation";
        }
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    report(7, "single-entry mutations falsify with replayable witnesses", ok, elapsed, detail);
}

} // namespace

int main() {
    std::string witness_dir = std::filesystem::temp_directory_path() /
                              std::filesystem::path("hulltop-acceptance");
    std::filesystem::create_directories(witness_dir);

    run_criterion(1, "additive synthesis: subadditive, lower continuous, sandwiched, kernel = tail",
                  {{"synth.additive", 200}, {"pinned.fixtures", 4}}, 60.0, 200, witness_dir);
    run_criterion(2, "translation-invariant synthesis with the enumeration maximality oracle",
                  {{"synth.translation", 100}}, 120.0, 200, witness_dir);
    run_criterion(3, "upper regularization yields pseudo-norms with exact sublevel identity",
                  {{"synth.regularize", 50}}, 30.0, 200, witness_dir);
    run_criterion(4, "generated families and their combination regenerate the filter",
                  {{"synth.generated", 10}}, 60.0, 200, witness_dir);
    run_criterion(5, "submeasure equivalence over every ideal with at most 4 atoms",
                  {{"bool.fn-equivalence", 31}}, 60.0, 200, witness_dir);
    run_criterion(6, "exact gauges: closed forms, sandwich, homogeneity, join identity",
                  {{"gauge.", 200 + 50 + 3}}, 30.0, 200, witness_dir);
    run_mutation_criterion(witness_dir);

    int failed = 0;
    for (const auto& c : g_results)
        if (!c.passed) ++failed;
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed;
}
