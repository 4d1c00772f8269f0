#ifndef BNSL_SCORES_HPP
#define BNSL_SCORES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bnsl/data.hpp"
#include "bnsl/graph.hpp"

namespace bnsl {

namespace score {

/// Bayesian Dirichlet equivalent uniform: alpha_ijk = alpha / (r_i q_i).
struct Bdeu {
    double alpha = 1.0;
};

/// Bayesian Dirichlet sparse: alpha_ijk = alpha / (r_i q~_i) on observed
/// parent configurations, zero elsewhere.
struct Bds {
    double alpha = 1.0;
};

/// alpha_ijk = 1.
struct K2 {};

/// alpha_ijk = 1/2.
struct BdJeffreys {};

struct Bic {};

/// Maximized multinomial log-likelihood.
struct LogLik {};

}  // namespace score

using ScoreKind = std::variant<score::Bdeu, score::Bds, score::K2, score::BdJeffreys, score::Bic, score::LogLik>;

/// Parses "bdeu:1", "bds:10", "k2", "jeffreys", "bic", "loglik".
ScoreKind parse_score_kind(std::string_view text);
std::string to_string(const ScoreKind& kind);
/// Imaginary sample size of BDeu/BDs, 0 for the others.
double score_alpha(const ScoreKind& kind);

/// Dirichlet hyperparameter of cell (j, k).
using CellPrior = std::function<double(ConfigIndex j, std::size_t k)>;

// All scores are natural logarithms. Unobserved parent configurations
// contribute a factor of one and are never visited.

/// General BD family score. Throws InvalidPrior if a cell with n_ijk > 0 has alpha_ijk = 0.
double local_bd(const FamilyCounts& counts, const CellPrior& alpha_cell);
double local_bdeu(const FamilyCounts& counts, double alpha);
double local_bds(const FamilyCounts& counts, double alpha);
double local_k2(const FamilyCounts& counts);
double local_bd_jeffreys(const FamilyCounts& counts);
/// Throws EmptyData when n = 0.
double local_loglik(const FamilyCounts& counts);
/// Log-likelihood minus (r_i - 1) q_i / 2 * log n. Throws EmptyData when n = 0.
double local_bic(const FamilyCounts& counts);

double local_score(const FamilyCounts& counts, const ScoreKind& kind);

/// Effective number of parameters of the family: sum_j r~_ij - q~_i.
std::int64_t effective_params(const FamilyCounts& counts);

/// Conditional entropy under posterior cell estimates (alpha* + n_ijk) / (r alpha* + n_ij).
double posterior_entropy_bdeu(const FamilyCounts& counts, double alpha);
double posterior_entropy_bds(const FamilyCounts& counts, double alpha);
/// Plug-in entropy with n_ijk / n_ij. Throws EmptyData when n = 0.
double empirical_entropy(const FamilyCounts& counts);

/// Per-node local scores, in node order.
std::vector<double> node_scores(const Dag& dag, const Dataset& data, const ScoreKind& kind);
double network_score(const Dag& dag, const Dataset& data, const ScoreKind& kind);
/// Sum of effective_params over all families.
std::int64_t network_effective_params(const Dag& dag, const Dataset& data);

/// log Gamma(a + n) - log Gamma(a), accurate for small integer n and large a.
double log_rising(double a, Count n);

}  // namespace bnsl

#endif  // BNSL_SCORES_HPP
