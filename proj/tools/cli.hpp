#pragma once

// Batch verification front end. `run` is the whole tool minus argument
// parsing, so tests can drive it in-process.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace CLI {
class App;
}

namespace hypersob::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_invalid_input = 2;

inline constexpr int max_degree_guard = 64;

struct RunConfig {
    std::string command;
    std::string family;  ///< P, L, bigP, bigL

    // Numbers stay as text until run() picks the backend.
    std::optional<std::string> alpha;
    std::optional<std::string> beta;
    std::optional<std::string> a;
    std::vector<std::string> deltas;
    std::vector<std::string> kappas;
    std::vector<std::string> num;
    std::vector<std::string> den;

    std::optional<int> n;
    std::optional<int> n_max;

    std::string weight = "both";  ///< gram: hypergeometric | displayed | both; quad: first two
    int samples = 20;
    int truncation = 40;
    std::optional<std::string> x;  ///< "re" or "re,im"
    std::optional<std::string> t;
    std::optional<double> tol;

    std::string format = "json";
    std::string out;  ///< empty: the output stream passed to run()

    unsigned threads = 1;
};

/// Raised for anything that maps to exit code 2.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// HYPERSOB_THREADS if set to a positive integer, else the hardware count.
unsigned threads_from_env();

/// Registers every subcommand and its flags on `app`, writing into `config`.
void register_commands(CLI::App& app, RunConfig& config);

/// Executes one subcommand; returns the process exit code. Diagnostics for
/// invalid input go to `err` as a single line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hypersob::cli
