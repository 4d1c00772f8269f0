#include "bnsl/search.hpp"

#include <algorithm>
#include <limits>

#include "bnsl/enumerate.hpp"
#include "bnsl/errors.hpp"

namespace bnsl {

std::size_t ScoreCache::KeyHash::operator()(const Key& k) const noexcept {
    std::size_t h = std::hash<NodeId>{}(k.child);
    for (NodeId p : k.parents) h ^= std::hash<NodeId>{}(p) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

ScoreCache::ScoreCache(const Dataset& data, ScoreKind kind) : data_(&data), kind_(kind) {}

double ScoreCache::local(NodeId child, const std::vector<NodeId>& parents) {
    Key key{child, parents};
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    ++misses_;
    const double value = local_score(count_family(*data_, child, parents), kind_);
    table_.emplace(std::move(key), value);
    return value;
}

double ScoreCache::network(const Dag& dag) {
    if (dag.node_count() != data_->variable_count()) throw DimensionMismatch("DAG and data differ in size");
    double total = 0.0;
    for (NodeId i = 0; i < dag.node_count(); ++i) total += local(i, dag.parents(i));
    return total;
}

namespace {

std::vector<NodeId> with(std::vector<NodeId> set, NodeId node) {
    set.insert(std::upper_bound(set.begin(), set.end(), node), node);
    return set;
}

std::vector<NodeId> without(std::vector<NodeId> set, NodeId node) {
    set.erase(std::find(set.begin(), set.end(), node));
    return set;
}

}  // namespace

double delta_score(const Dag& dag, const ArcMove& move, ScoreCache& cache) {
    if (would_create_cycle(dag, move)) throw CyclicResult("move closes a directed cycle: " + to_string(move));
    const auto& to_parents = dag.parents(move.to);
    switch (move.kind) {
        case MoveKind::Add:
            return cache.local(move.to, with(to_parents, move.from)) - cache.local(move.to, to_parents);
        case MoveKind::Delete:
            return cache.local(move.to, without(to_parents, move.from)) - cache.local(move.to, to_parents);
        case MoveKind::Reverse: {
            const auto& from_parents = dag.parents(move.from);
            return cache.local(move.to, without(to_parents, move.from)) - cache.local(move.to, to_parents) +
                   cache.local(move.from, with(from_parents, move.to)) - cache.local(move.from, from_parents);
        }
    }
    return 0.0;
}

std::vector<ArcMove> candidate_moves(const Dag& dag, std::optional<std::size_t> max_parents) {
    std::vector<ArcMove> moves;
    const std::size_t n = dag.node_count();
    auto room = [&](NodeId node) { return !max_parents || dag.parents(node).size() < *max_parents; };
    for (NodeId to = 0; to < n; ++to) {
        for (NodeId from = 0; from < n; ++from) {
            if (from == to) continue;
            if (dag.has_arc(from, to)) {
                moves.push_back({MoveKind::Delete, from, to});
                const ArcMove reverse{MoveKind::Reverse, from, to};
                if (room(from) && !would_create_cycle(dag, reverse)) moves.push_back(reverse);
            } else if (!dag.has_arc(to, from)) {
                const ArcMove add{MoveKind::Add, from, to};
                if (room(to) && !would_create_cycle(dag, add)) moves.push_back(add);
            }
        }
    }
    return moves;
}

LearnResult hill_climb(const Dataset& data, const ScoreKind& kind, const PriorKind& prior,
                       const LearnConfig& config) {
    const std::size_t n = data.variable_count();
    if (n == 0) throw std::invalid_argument("dataset has no variables");
    if (data.row_count() == 0) throw EmptyData("structure learning needs at least one observation");
    if (config.improvement_epsilon < 0.0) throw std::invalid_argument("improvement epsilon must be >= 0");
    if (config.max_parents && *config.max_parents == 0) throw std::invalid_argument("max_parents must be positive");
    if (n >= 2) resolve_beta(prior, n);

    Dag dag = config.start.value_or(Dag(n));
    if (dag.node_count() != n) throw DimensionMismatch("start graph and data differ in size");
    if (config.max_parents)
        for (NodeId i = 0; i < n; ++i)
            if (dag.parents(i).size() > *config.max_parents)
                throw std::invalid_argument("start graph violates max_parents");

    ScoreCache cache(data, kind);
    LearnResult result{dag, {}, cache.network(dag) + log_prior(prior, dag), false};

    for (std::size_t iteration = 1;; ++iteration) {
        std::optional<ArcMove> best;
        double best_gain = config.improvement_epsilon;
        for (const ArcMove& move : candidate_moves(result.dag, config.max_parents)) {
            const double gain = delta_score(result.dag, move, cache) + log_prior_move_ratio(prior, move, n);
            if (gain > best_gain) {
                best = move;
                best_gain = gain;
            }
        }
        if (!best) break;
        if (iteration > config.max_iterations) {
            result.iteration_limit_reached = true;
            break;
        }
        result.dag = apply_move(result.dag, *best);
        result.log_posterior = cache.network(result.dag) + log_prior(prior, result.dag);
        result.trace.push_back({iteration, *best, best_gain, result.log_posterior});
    }
    return result;
}

Dag exhaustive_map(const Dataset& data, const ScoreKind& kind, const PriorKind& prior) {
    const std::size_t n = data.variable_count();
    if (n > kMaxExhaustiveNodes)
        throw TooLarge("exhaustive search is limited to " + std::to_string(kMaxExhaustiveNodes) + " nodes");
    ScoreCache cache(data, kind);
    std::optional<Dag> best;
    double best_value = -std::numeric_limits<double>::infinity();
    for_each_dag(n, [&](const Dag& g) {
        const double value = cache.network(g) + log_prior(prior, g);
        if (!best || value > best_value) {
            best = g;
            best_value = value;
        }
    });
    return *best;
}

}  // namespace bnsl
