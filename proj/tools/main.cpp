#include <CLI11.hpp>

#include <iostream>

#include "hulltop/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"hulltop: hull structures, pseudo-norm synthesis and exact gauges on finite carriers"};
    app.require_subcommand(1);

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "parse and validate a structure file");
    validate->add_option("file", validate_path, "structure file")->required();

    hulltop::cli::SynthArgs synth_args;
    auto* synth = app.add_subcommand("synth", "synthesize a pseudo-norm from a declared string");
    synth->add_option("file", synth_args.path, "structure file")->required();
    synth->add_option("--string", synth_args.string_name, "string name")->required();
    synth->add_option("--hull", synth_args.hull_name, "hull structure the string lives in")->required();
    synth->add_option("--basic", synth_args.basic_name, "basic hull structure to regularize against")
        ->required();
    synth->add_option("--grid", synth_args.grid, "dyadic grid exponent (default: prefix length)");

    hulltop::cli::SuiteArgs suite_args;
    auto* suite = app.add_subcommand("suite", "run the property suites over a generated corpus");
    suite->add_option("--corpus-size", suite_args.options.corpus_size, "instances per suite");
    suite->add_option("--seed", suite_args.options.seed, "generator seed");
    suite->add_option("--max-carrier", suite_args.options.max_carrier, "largest carrier to generate");
    suite->add_option("--witness-dir", suite_args.options.witness_dir, "directory for witness dumps");
    suite->add_option("--only", suite_args.options.only, "run only suites with this name prefix");
    suite->add_option("--mutate", suite_args.options.mutate,
                      "perturb a pinned fixture (testing hook; see README)");
    suite->add_option("--replay", suite_args.replay, "replay a witness file");

    CLI11_PARSE(app, argc, argv);

    if (*validate) return hulltop::cli::cmd_validate(validate_path, std::cout, std::cerr);
    if (*synth) return hulltop::cli::cmd_synth(synth_args, std::cout, std::cerr);
    return hulltop::cli::cmd_suite(suite_args, std::cout, std::cerr);
}
