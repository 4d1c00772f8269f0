#ifndef BNSL_CPDAG_HPP
#define BNSL_CPDAG_HPP

#include <cstddef>
#include <set>

#include "bnsl/graph.hpp"

namespace bnsl {

/// Unordered node pair, normalized so that a < b.
struct Edge {
    NodeId a;
    NodeId b;

    Edge(NodeId x, NodeId y) : a(x < y ? x : y), b(x < y ? y : x) {}
    auto operator<=>(const Edge&) const = default;
};

/// State of an unordered pair {a, b} (a < b) in a partially directed graph.
enum class EdgeState { None, Forward, Backward, Undirected };

/// Completed partially directed graph: compelled arcs directed, reversible
/// arcs undirected.
class Cpdag {
public:
    Cpdag(std::size_t node_count, std::set<Arc> directed, std::set<Edge> undirected);

    std::size_t node_count() const noexcept { return node_count_; }
    const std::set<Arc>& directed() const noexcept { return directed_; }
    const std::set<Edge>& undirected() const noexcept { return undirected_; }

    /// Forward means a -> b for the normalized pair (a < b).
    EdgeState state(NodeId x, NodeId y) const;

    bool operator==(const Cpdag&) const = default;

private:
    std::size_t node_count_;
    std::set<Arc> directed_;
    std::set<Edge> undirected_;
};

/// V-structure detection followed by closure under orientation rules R1-R3.
Cpdag to_cpdag(const Dag& dag);

/// Structural Hamming distance: one unit per node pair whose state differs
/// (missing/extra adjacency, reversed arc, directed vs undirected).
/// Throws DimensionMismatch on unequal node counts.
std::size_t shd(const Cpdag& a, const Cpdag& b);

/// Same metric computed directly on DAGs, without collapsing to equivalence classes.
std::size_t shd_dag(const Dag& a, const Dag& b);

}  // namespace bnsl

#endif  // BNSL_CPDAG_HPP
