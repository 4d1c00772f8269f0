#ifndef BNSL_GRAPH_HPP
#define BNSL_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bnsl {

/// Dense 0-based node index. Names live in the data layer only.
using NodeId = std::size_t;
using ParentSets = std::vector<std::vector<NodeId>>;

struct Arc {
    NodeId from;
    NodeId to;

    auto operator<=>(const Arc&) const = default;
};

enum class MoveKind { Add, Delete, Reverse };

/// A single-arc edit. Delete and Reverse name the arc as it currently is (from -> to).
struct ArcMove {
    MoveKind kind;
    NodeId from;
    NodeId to;

    bool operator==(const ArcMove&) const = default;
};

std::string to_string(MoveKind kind);
std::string to_string(const ArcMove& move);

/// True iff the directed graph given by `parents` has a topological order.
/// Parent indices must be < parents.size().
bool is_acyclic(const ParentSets& parents);

/// Directed acyclic graph stored as sorted parent sets.
///
/// Every constructor validates: indices in range, no self-loops, no
/// duplicate arcs and no directed cycles. A Dag is therefore always a DAG.
class Dag {
public:
    explicit Dag(std::size_t node_count);
    Dag(std::size_t node_count, std::span<const Arc> arcs);
    explicit Dag(ParentSets parents);

    std::size_t node_count() const noexcept { return parents_.size(); }
    const std::vector<NodeId>& parents(NodeId node) const { return parents_.at(node); }
    const ParentSets& parent_sets() const noexcept { return parents_; }
    std::vector<NodeId> children(NodeId node) const;

    bool has_arc(NodeId from, NodeId to) const;
    bool adjacent(NodeId a, NodeId b) const { return has_arc(a, b) || has_arc(b, a); }
    std::size_t arc_count() const noexcept;
    /// Arcs sorted by (from, to).
    std::vector<Arc> arcs() const;

    /// Is there a directed path of length >= 1 from `from` to `to`?
    bool has_path(NodeId from, NodeId to) const;

    bool operator==(const Dag&) const = default;

private:
    ParentSets parents_;
};

/// Kahn order, smallest available index first.
std::vector<NodeId> topological_order(const Dag& dag);

/// Checks the move's preconditions (throws InvalidMove / IndexOutOfRange) and
/// reports whether applying it would close a directed cycle.
bool would_create_cycle(const Dag& dag, const ArcMove& move);

/// Returns the edited graph. Throws InvalidMove if the arc is present/absent
/// contrary to the move kind, CyclicResult if the result would be cyclic.
Dag apply_move(const Dag& dag, const ArcMove& move);

}  // namespace bnsl

#endif  // BNSL_GRAPH_HPP
