#ifndef BNSL_SIMULATE_HPP
#define BNSL_SIMULATE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bnsl/bn.hpp"
#include "bnsl/priors.hpp"
#include "bnsl/scores.hpp"

namespace bnsl {

/// A (marginal likelihood, graph prior) pair, written "SCORE/PRIOR", e.g. "bds:1/mu:0.5".
struct Strategy {
    ScoreKind score;
    PriorKind prior;
};

Strategy parse_strategy(std::string_view text);
std::string to_string(const Strategy& strategy);

struct SimulationConfig {
    std::string network_name = "network";
    std::vector<double> ratios;
    std::size_t replicates = 1;
    std::vector<Strategy> strategies;
    std::size_t test_set_size = 10000;
    std::uint64_t seed = 1;
    std::size_t threads = 1;
    std::optional<std::size_t> max_parents;
    /// Imaginary sample size of the posterior CPT estimates.
    double fit_alpha = 1.0;
    /// When false the seconds column is written as 0 so reruns are byte-identical.
    bool record_timing = true;
};

/// Throws std::invalid_argument unless replicates >= 1, ratios > 0, strategies non-empty.
void validate(const SimulationConfig& config);

struct ResultRow {
    std::string network;
    double n_over_p = 0.0;
    std::size_t replicate = 0;
    std::string score;
    std::string prior;
    std::optional<double> alpha;
    std::optional<double> beta_or_c;
    std::size_t shd = 0;
    std::size_t arcs = 0;
    double arcs_ratio = 0.0;
    /// Test-set log-likelihood divided by -test_set_size.
    double loglik = 0.0;
    double seconds = 0.0;
    std::string error;
};

/// For every (ratio, replicate): draws a training sample of ceil(ratio * p)
/// rows and a test sample of test_set_size rows from `reference`, then for
/// every strategy learns a DAG, fits it and records SHD against the reference
/// CPDAG, arc counts and predictive log-likelihood. Replicate r of ratio k
/// uses Rng::stream(seed, k, r). A failing strategy yields a row with `error`
/// set and the run continues. Rows are ordered by (ratio, replicate, strategy).
std::vector<ResultRow> run_simulation(const Bn& reference, const SimulationConfig& config);

/// Header comment line, then
/// network,n_over_p,replicate,score,prior,alpha,beta_or_c,shd,arcs,arcs_ratio,loglik,seconds,error
std::string write_results_csv(const std::vector<ResultRow>& rows);

inline constexpr std::string_view kResultsColumns =
    "network,n_over_p,replicate,score,prior,alpha,beta_or_c,shd,arcs,arcs_ratio,loglik,seconds,error";

struct SyntheticSpec {
    std::size_t nodes = 10;
    std::size_t arcs = 12;
    std::size_t min_levels = 2;
    std::size_t max_levels = 3;
    std::size_t max_parents = 3;
    std::uint64_t seed = 20170601;
};

/// Deterministic random reference network: random arcs respecting a random
/// node order, skewed CPT rows.
Bn make_synthetic_reference(const SyntheticSpec& spec = {});

}  // namespace bnsl

#endif  // BNSL_SIMULATE_HPP
