#ifndef BNSL_COMMANDS_HPP
#define BNSL_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bnsl/simulate.hpp"

namespace bnsl {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitComputation = 3;

/// Entry point of the `bnsl` tool. `args` excludes the program name. Output
/// files named by --out are written directly; everything else goes to `out`,
/// diagnostics to `err`. Returns 0, 2 (input error) or 3 (computation error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Simulation settings read from a `key = value` file. Recognized keys:
/// reference, name, ratios (comma list), replicates, strategy (repeatable),
/// test_size, seed, threads, max_parents, fit_alpha, timing (true/false).
/// '#' starts a comment. `reference` is returned as written.
struct SimulationFile {
    std::string reference;
    SimulationConfig config;
};
SimulationFile parse_simulation_file(std::string_view text);

/// Default grid for bfcurve: 10^(k/2) for k = -12..16.
std::vector<double> default_alpha_grid();

}  // namespace bnsl

#endif  // BNSL_COMMANDS_HPP
