#ifndef BNSL_SEARCH_HPP
#define BNSL_SEARCH_HPP

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bnsl/data.hpp"
#include "bnsl/graph.hpp"
#include "bnsl/priors.hpp"
#include "bnsl/scores.hpp"

namespace bnsl {

struct LearnConfig {
    std::optional<std::size_t> max_parents;
    std::size_t max_iterations = 10000;
    /// Minimum log-posterior gain for a move to be accepted.
    double improvement_epsilon = 1e-10;
    std::optional<Dag> start;
};

struct TraceStep {
    std::size_t iteration;
    ArcMove move;
    double delta;
    double log_posterior;
};

using SearchTrace = std::vector<TraceStep>;

struct LearnResult {
    Dag dag;
    SearchTrace trace;
    /// Network score plus arc-wise log prior of `dag`.
    double log_posterior;
    /// Set when max_iterations ran out before reaching a local optimum.
    bool iteration_limit_reached = false;
};

/// Memoized local scores keyed by (child, sorted parent set). One per search run.
class ScoreCache {
public:
    ScoreCache(const Dataset& data, ScoreKind kind);

    double local(NodeId child, const std::vector<NodeId>& parents);
    double network(const Dag& dag);

    const Dataset& data() const noexcept { return *data_; }
    const ScoreKind& kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return table_.size(); }
    std::size_t misses() const noexcept { return misses_; }

private:
    struct Key {
        NodeId child;
        std::vector<NodeId> parents;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };

    const Dataset* data_;
    ScoreKind kind_;
    std::unordered_map<Key, double, KeyHash> table_;
    std::size_t misses_ = 0;
};

/// Change in network score from applying `move`, rescoring only the touched families.
double delta_score(const Dag& dag, const ArcMove& move, ScoreCache& cache);

/// Every legal move on `dag`, ordered by target node, then source node, then
/// Add < Delete < Reverse. Moves closing a cycle or exceeding max_parents are skipped.
std::vector<ArcMove> candidate_moves(const Dag& dag, std::optional<std::size_t> max_parents = std::nullopt);

/// Greedy best-improvement hill climbing on log score + log prior.
LearnResult hill_climb(const Dataset& data, const ScoreKind& kind, const PriorKind& prior,
                       const LearnConfig& config = {});

/// Global maximizer of log score + log prior over every DAG (at most 4 nodes).
/// Ties go to the earliest DAG in enumeration order. Throws TooLarge beyond 4 nodes.
Dag exhaustive_map(const Dataset& data, const ScoreKind& kind, const PriorKind& prior);

inline constexpr std::size_t kMaxExhaustiveNodes = 4;

}  // namespace bnsl

#endif  // BNSL_SEARCH_HPP
