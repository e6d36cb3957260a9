#include "runner.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"parahiggs: verification suites for parabolic SL2 Hitchin systems and their critical-level quantization"};
    parahiggs::cli::RunOptions opts;
    std::uint64_t seed = 0;
    app.add_option("-c,--config", opts.config_path, "scenario config (JSON)")->required();
    app.add_option("-o,--output", opts.output_path, "report path (default: stdout)");
    app.add_option("-s,--suite", opts.suites, "suite to run (repeatable); overrides the config selection")
        ->check(CLI::IsMember(parahiggs::cli::all_suites()));
    auto* seed_opt = app.add_option("--seed", seed, "override the config seed");
    app.add_flag("-v,--verbose", opts.verbose, "one line per suite on stderr");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (*seed_opt) opts.seed = seed;
    return parahiggs::cli::run(opts, std::cerr);
}
