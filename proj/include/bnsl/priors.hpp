#ifndef BNSL_PRIORS_HPP
#define BNSL_PRIORS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "bnsl/graph.hpp"

namespace bnsl {

namespace prior {

/// P(G) proportional to 1.
struct Uniform {};

/// Independent arcs: each direction with probability beta/2, absent with 1 - beta.
struct MarginalUniform {
    double beta = 0.5;
};

/// Marginal uniform with beta = 2c / (N - 1), so that E|A| = cN.
struct MarginalUniformSparse {
    double c = 1.0;
};

}  // namespace prior

using PriorKind = std::variant<prior::Uniform, prior::MarginalUniform, prior::MarginalUniformSparse>;

/// Parses "u", "mu:0.5", "mu-sparse:1".
PriorKind parse_prior_kind(std::string_view text);
std::string to_string(const PriorKind& kind);

/// Effective beta; std::nullopt for the uniform prior. Throws OutOfRange unless
/// beta lies strictly inside (0, 1).
std::optional<double> resolve_beta(const PriorKind& kind, std::size_t n_nodes);

/// log P(G_after) / P(G_before) for a single-arc move.
double log_prior_move_ratio(const PriorKind& kind, const ArcMove& move, std::size_t n_nodes);

/// N (N - 1) beta / 2. Throws NotApplicable for the uniform prior.
double expected_arc_count(const PriorKind& kind, std::size_t n_nodes);

/// Unnormalized arc-wise log prior: |A| log(beta/2) + (#non-adjacent pairs) log(1 - beta).
/// Zero for the uniform prior. Differences between graphs equal the move ratios.
double log_prior(const PriorKind& kind, const Dag& dag);

}  // namespace bnsl

#endif  // BNSL_PRIORS_HPP
