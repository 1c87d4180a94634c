// Command-line driver for the verification library: batch sweeps, random
// kernel testing, single-point evaluation, and benchmarking.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hsum/hsum.hpp>

namespace {

// "--ids f1t0,f2t1" or "--ids all" (default).
bool parse_ids(const std::string& arg, std::vector<hsum::theorem_id>& ids,
               std::string& bad) {
    if (arg == "all") return true;
    std::istringstream in(arg);
    std::string token;
    while (std::getline(in, token, ',')) {
        auto id = hsum::parse_theorem_id(token);
        if (!id) {
            bad = token;
            return false;
        }
        ids.push_back(*id);
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of harmonic-number summation formulas"};
    app.require_subcommand(1);
    app.fallthrough();

    hsum::run_config config;
    std::string format = "text";
    std::string ids_arg = "all";
    std::string eval_id = "f1t0";

    app.add_option("--format", format, "Output format: text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", config.out, "Write records to this path");
    app.add_option("--parallel", config.parallel, "Worker thread count")
        ->check(CLI::PositiveNumber);

    auto add_n_max = [&config](CLI::App* cmd) {
        cmd->add_option("--n-max", config.n_max, "Largest n in the sweep")
            ->check(CLI::NonNegativeNumber);
    };
    auto add_sampling = [&config](CLI::App* cmd) {
        cmd->add_option("--samples", config.samples, "Non-pole samples per kind")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", config.seed, "Random seed");
    };

    CLI::App* theorems = app.add_subcommand(
        "verify-theorems", "Check every closed form against its direct sum");
    add_n_max(theorems);
    theorems->add_option("--ids", ids_arg, "Comma-separated theorem ids, or all");

    CLI::App* kernels = app.add_subcommand(
        "verify-kernels", "Randomized check of the nine weighted kernels");
    add_sampling(kernels);
    add_n_max(kernels);
    kernels->add_option("--num-bound", config.num_bound, "Max |numerator| drawn")
        ->check(CLI::NonNegativeNumber);
    kernels->add_option("--den-bound", config.den_bound, "Max denominator drawn")
        ->check(CLI::PositiveNumber);

    CLI::App* relations = app.add_subcommand(
        "verify-relations", "Exhaustive check of the six bridge relations");
    add_n_max(relations);

    CLI::App* derivations = app.add_subcommand(
        "verify-derivations", "Replay each theorem's derivation over duals");
    add_n_max(derivations);
    derivations->add_option("--ids", ids_arg, "Comma-separated theorem ids, or all");

    CLI::App* cv = app.add_subcommand(
        "verify-cv", "Randomized check of the base convolution identity");
    add_sampling(cv);
    add_n_max(cv);

    CLI::App* eval =
        app.add_subcommand("eval", "Evaluate one theorem at a single n");
    eval->add_option("--theorem", eval_id, "Theorem id (f1t0..f4t2)")->required();
    eval->add_option("--n", config.eval_n, "Evaluation point")
        ->required()
        ->check(CLI::NonNegativeNumber);

    CLI::App* bench = app.add_subcommand(
        "bench", "Time direct sums against closed forms (no assertions)");
    add_n_max(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (format == "json") {
        config.format = hsum::output_format::json;
    } else if (format == "csv") {
        config.format = hsum::output_format::csv;
    }

    std::string bad;
    if (!parse_ids(ids_arg, config.ids, bad)) {
        std::cerr << "error: unknown theorem id: " << bad << "\n";
        return 2;
    }

    if (theorems->parsed()) {
        config.cmd = hsum::command::verify_theorems;
    } else if (kernels->parsed()) {
        config.cmd = hsum::command::verify_kernels;
    } else if (relations->parsed()) {
        config.cmd = hsum::command::verify_relations;
    } else if (derivations->parsed()) {
        config.cmd = hsum::command::verify_derivations;
    } else if (cv->parsed()) {
        config.cmd = hsum::command::verify_cv;
    } else if (eval->parsed()) {
        config.cmd = hsum::command::eval;
        auto id = hsum::parse_theorem_id(eval_id);
        if (!id) {
            std::cerr << "error: unknown theorem id: " << eval_id << "\n";
            return 2;
        }
        config.eval_id = *id;
    } else if (bench->parsed()) {
        config.cmd = hsum::command::bench;
    }

    return hsum::run(config, std::cout, std::cerr);
}
