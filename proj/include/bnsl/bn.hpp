#ifndef BNSL_BN_HPP
#define BNSL_BN_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bnsl/data.hpp"
#include "bnsl/graph.hpp"
#include "bnsl/rng.hpp"

namespace bnsl {

/// Conditional probability table: one row of child probabilities per parent
/// configuration, rows indexed like FamilyCounts (first parent most significant).
class Cpt {
public:
    /// Validates shape, entries in [0, 1] and row sums within 1e-12.
    Cpt(std::size_t child_cardinality, std::vector<std::size_t> parent_cardinalities, std::vector<double> table);

    std::size_t child_cardinality() const noexcept { return r_; }
    const std::vector<std::size_t>& parent_cardinalities() const noexcept { return parent_cards_; }
    std::size_t config_count() const noexcept { return table_.size() / r_; }
    std::span<const double> row(std::size_t config) const;
    double prob(std::size_t config, std::size_t level) const { return table_.at(config * r_ + level); }
    const std::vector<double>& table() const noexcept { return table_; }

    bool operator==(const Cpt&) const = default;

private:
    std::size_t r_;
    std::vector<std::size_t> parent_cards_;
    std::vector<double> table_;
};

/// A DAG with named variables and one CPT per node.
class Bn {
public:
    Bn(Dag dag, std::vector<Variable> variables, std::vector<Cpt> cpts, std::string name = "network");

    const Dag& dag() const noexcept { return dag_; }
    const std::vector<Variable>& variables() const noexcept { return variables_; }
    const std::vector<Cpt>& cpts() const noexcept { return cpts_; }
    const Cpt& cpt(NodeId node) const { return cpts_.at(node); }
    const std::string& name() const noexcept { return name_; }
    std::size_t node_count() const noexcept { return variables_.size(); }

    /// Row of node's CPT selected by the parent levels inside `levels` (one entry per variable).
    std::size_t config_of(NodeId node, std::span<const Level> levels) const;

private:
    Dag dag_;
    std::vector<Variable> variables_;
    std::vector<Cpt> cpts_;
    std::string name_;
};

/// Which Dirichlet cell prior posterior estimates use.
enum class FitPrior {
    Bdeu,  ///< alpha / (r_i q_i) on every configuration.
    Bds    ///< alpha / (r_i q~_i) on observed configurations.
};

/// Posterior-mean CPTs (alpha* + n_ijk) / (r alpha* + n_ij); unobserved
/// configurations get the uniform row.
Bn fit(const Dag& dag, const Dataset& data, double alpha, FitPrior prior = FitPrior::Bdeu);

/// Ancestral sampling in topological order. Consumes one uniform per node per
/// row, row-major, from `rng`.
Dataset sample(const Bn& bn, std::size_t n, Rng& rng);
Dataset sample(const Bn& bn, std::size_t n, std::uint64_t seed);

/// sum over rows and nodes of log pi_{i, config, level}. Throws SchemaMismatch
/// unless `test` has exactly the network's variables.
double predictive_loglik(const Bn& bn, const Dataset& test);

}  // namespace bnsl

#endif  // BNSL_BN_HPP
