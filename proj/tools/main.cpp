#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    hypersob::cli::RunConfig config;
    CLI::App app{"Construct and verify hypergeometric Sobolev orthogonal polynomials", "hypersob"};
    hypersob::cli::register_commands(app, config);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "hypersob: error: " << e.what() << '\n';
        return hypersob::cli::exit_invalid_input;
    }
    config.threads = hypersob::cli::threads_from_env();
    return hypersob::cli::run(config, std::cout, std::cerr);
}
