#include <doctest.h>

#include "hulltop/cli.hpp"
#include "hulltop/corpus.hpp"
#include "hulltop/error.hpp"
#include "hulltop/structure_file.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hulltop;

namespace {

std::string scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / "hulltop-cli-tests";
    std::filesystem::create_directories(dir);
    return dir.string();
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = scratch_dir() + "/cli-test-" + name + ".hull";
    std::ofstream os(path);
    os << content;
    return path;
}

const char* kZ8 = R"([monoid M]
kind = cyclic 8

[hull P]
monoid = M
kind = powerset

[filter F]
monoid = M
base = {0 1 2 6 7} {0 1 7} {0}

[string S]
monoid = M
hull = P
prefix = {0 1 2 6 7} {0 1 7}
tail = {0}
)";

} // namespace

TEST_CASE("structure files parse to validated objects") {
    std::istringstream is(kZ8);
    StructureFile sf = parse_structure_file(is);
    CHECK(sf.monoids.count("M") == 1);
    CHECK(sf.hulls.count("P") == 1);
    CHECK(sf.filters.at("F").base().size() == 3);
    CHECK(sf.strings.at("S").prefix_length() == 2);
    CHECK(sf.notes.size() == 1);

    // Unknown sections and keys are rejected.
    std::istringstream bad1("[widget W]\nx = 1\n");
    CHECK_THROWS_AS(parse_structure_file(bad1), Error);
    std::istringstream bad2("[monoid M]\nkind = cyclic 8\nsurprise = 1\n");
    CHECK_THROWS_AS(parse_structure_file(bad2), Error);
    std::istringstream bad3("[monoid M]\nkind = elliptic 8\n");
    CHECK_THROWS_AS(parse_structure_file(bad3), Error);

    // Explicit monoids round trip through the writer.
    std::ostringstream dump;
    write_monoid_section(dump, "M2", *sf.monoids.at("M"));
    write_filter_section(dump, "F2", "M2", sf.filters.at("F"));
    write_string_section(dump, "S2", "M2", sf.strings.at("S"));
    std::istringstream back(dump.str());
    StructureFile sf2 = parse_structure_file(back);
    CHECK(sf2.monoids.at("M2")->size() == 8);
    CHECK(sf2.monoids.at("M2")->is_group());
    CHECK(sf2.filters.at("F2").base() == sf.filters.at("F").base());
    CHECK(sf2.strings.at("S2").prefix() == sf.strings.at("S").prefix());

    // Ordered monoids keep their order through the round trip.
    auto pinch = fixtures::pinch();
    std::ostringstream odump;
    write_monoid_section(odump, "P", *pinch);
    std::istringstream oback(odump.str());
    StructureFile sf3 = parse_structure_file(oback);
    const auto& p2 = sf3.monoids.at("P");
    REQUIRE(p2->has_order());
    for (std::uint32_t a = 0; a < 5; ++a)
        for (std::uint32_t b = 0; b < 5; ++b) {
            CHECK(p2->order().le(a, b) == pinch->order().le(a, b));
            CHECK(p2->add(a, b) == pinch->add(a, b));
        }
}

TEST_CASE("cmd_validate exit codes") {
    std::ostringstream out, err;
    auto path = write_temp("ok", kZ8);
    CHECK(cli::cmd_validate(path, out, err) == cli::kExitOk);
    CHECK(out.str().find("filter F: 3 base sets, valid") != std::string::npos);

    auto bad = write_temp("badfilter", "[monoid M]\nkind = cyclic 8\n[filter F]\nmonoid = M\nbase = {0 1}\n");
    std::ostringstream out2, err2;
    CHECK(cli::cmd_validate(bad, out2, err2) == cli::kExitValidation);
    CHECK(err2.str().find("NoHalvingSet") != std::string::npos);

    auto garbled = write_temp("garbled", "monoid M\n");
    std::ostringstream out3, err3;
    CHECK(cli::cmd_validate(garbled, out3, err3) == cli::kExitParse);

    std::ostringstream out4, err4;
    CHECK(cli::cmd_validate(write_temp("empty", ""), out4, err4) == cli::kExitOk);
    CHECK(out4.str().empty());

    // A declared pseudo-norm table that is not subadditive fails validation.
    auto badp = write_temp("badpnorm",
                           "[monoid M]\nkind = saturating_cube 3 1\n[pnorm R]\nmonoid = M\n"
                           "values = 0/1 1/2 1/4 1/1\n");
    std::ostringstream out5, err5;
    CHECK(cli::cmd_validate(badp, out5, err5) == cli::kExitValidation);
    CHECK(err5.str().find("not subadditive") != std::string::npos);

    // Polytope sections report balancedness.
    auto poly = write_temp("poly",
                           "[polytope X]\ndim = 2\nvertex = 1 0\nvertex = -1 0\n"
                           "vertex = 0 1/2\nvertex = 0 -1/2\n");
    std::ostringstream out6, err6;
    CHECK(cli::cmd_validate(poly, out6, err6) == cli::kExitOk);
    CHECK(out6.str().find("dim=2 vertices=4 balanced") != std::string::npos);
}

TEST_CASE("cmd_synth prints the table with the verification trailer") {
    auto path = write_temp("synth", kZ8);
    std::ostringstream out, err;
    cli::SynthArgs args{path, "S", "P", "P", 0};
    CHECK(cli::cmd_synth(args, out, err) == cli::kExitOk);
    CHECK(out.str() ==
          "0 0/1\n1 1/2\n2 1/1\n3 1/1\n4 1/1\n5 1/1\n6 1/1\n7 1/2\n# sandwich-verified\n");

    // Deterministic: a second run yields byte-identical output.
    std::ostringstream out2, err2;
    CHECK(cli::cmd_synth(args, out2, err2) == cli::kExitOk);
    CHECK(out.str() == out2.str());

    // Unknown string or unavailable hull kinds are precondition failures.
    std::ostringstream out3, err3;
    cli::SynthArgs missing{path, "NOPE", "P", "P", 0};
    CHECK(cli::cmd_synth(missing, out3, err3) == cli::kExitPrecondition);

    std::ostringstream out4, err4;
    cli::SynthArgs badhull{path, "S", "lower-sets", "P", 0};
    CHECK(cli::cmd_synth(badhull, out4, err4) == cli::kExitPrecondition); // no order on the group
}

TEST_CASE("boolean synthesis through the front end") {
    auto path = write_temp("bool", R"([monoid B]
kind = boolean_sym_diff 3

[hull L]
monoid = B
kind = lower-sets

[string S]
monoid = B
hull = L
prefix = {0 1} {0 1}
tail = {0}
)");
    std::ostringstream out, err;
    cli::SynthArgs args{path, "S", "L", "L", 0};
    CHECK(cli::cmd_synth(args, out, err) == cli::kExitOk);
    CHECK(out.str() ==
          "0 0/1\n1 1/2\n2 1/1\n3 1/1\n4 1/1\n5 1/1\n6 1/1\n7 1/1\n# sandwich-verified\n");
}

TEST_CASE("cmd_suite vacuous run and determinism") {
    cli::SuiteArgs args;
    args.options.corpus_size = 20;
    args.options.only = "gauge.formulas";
    args.options.witness_dir = scratch_dir();
    std::ostringstream out1, err1, out2, err2;
    CHECK(cli::cmd_suite(args, out1, err1) == cli::kExitOk);
    CHECK(cli::cmd_suite(args, out2, err2) == cli::kExitOk);
    CHECK(out1.str() == out2.str());
    CHECK(out1.str().find("PASS gauge.formulas") != std::string::npos);

    // A zero corpus leaves every generated suite vacuous, explicitly marked.
    cli::SuiteArgs vac;
    vac.options.corpus_size = 0;
    vac.options.only = "monoid.";
    std::ostringstream out3, err3;
    CHECK(cli::cmd_suite(vac, out3, err3) == cli::kExitOk);
    CHECK(out3.str().find("instances=0") != std::string::npos);
    CHECK(out3.str().find("0 instances") != std::string::npos);
}

TEST_CASE("mutations falsify the pinned fixtures and replay") {
    for (const auto& id : suites::mutation_ids()) {
        CAPTURE(id);
        cli::SuiteArgs args;
        args.options.corpus_size = 0;
        args.options.only = "pinned";
        args.options.mutate = id;
        args.options.witness_dir = scratch_dir();
        std::ostringstream out, err;
        CHECK(cli::cmd_suite(args, out, err) == cli::kExitFalsified);
        CHECK(out.str().find("FAIL pinned.fixtures") != std::string::npos);
        // The witness path is reported on the diagnostic stream and replays
        // to the same failure.
        auto pos = err.str().find("witness: ");
        REQUIRE(pos != std::string::npos);
        std::string path = err.str().substr(pos + 9);
        path = path.substr(0, path.find('\n'));
        CHECK(suites::replay_witness(path));
    }
}
