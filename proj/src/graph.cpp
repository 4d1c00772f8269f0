#include "bnsl/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

#include "bnsl/errors.hpp"

namespace bnsl {

std::string to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::Add: return "add";
        case MoveKind::Delete: return "delete";
        case MoveKind::Reverse: return "reverse";
    }
    return "?";
}

std::string to_string(const ArcMove& move) {
    return to_string(move.kind) + "(" + std::to_string(move.from) + "->" + std::to_string(move.to) + ")";
}

bool is_acyclic(const ParentSets& parents) {
    const std::size_t n = parents.size();
    std::vector<std::size_t> indegree(n, 0);
    std::vector<std::vector<NodeId>> children(n);
    for (NodeId child = 0; child < n; ++child) {
        for (NodeId parent : parents[child]) {
            if (parent >= n) throw IndexOutOfRange("parent index " + std::to_string(parent) + " out of range");
            children[parent].push_back(child);
            ++indegree[child];
        }
    }
    std::vector<NodeId> ready;
    for (NodeId i = 0; i < n; ++i)
        if (indegree[i] == 0) ready.push_back(i);
    std::size_t visited = 0;
    while (!ready.empty()) {
        NodeId node = ready.back();
        ready.pop_back();
        ++visited;
        for (NodeId c : children[node])
            if (--indegree[c] == 0) ready.push_back(c);
    }
    return visited == n;
}

namespace {

void validate(const ParentSets& parents) {
    if (parents.empty()) throw std::invalid_argument("a DAG needs at least one node");
    const std::size_t n = parents.size();
    for (NodeId child = 0; child < n; ++child) {
        const auto& ps = parents[child];
        for (std::size_t k = 0; k < ps.size(); ++k) {
            if (ps[k] >= n) throw IndexOutOfRange("parent index " + std::to_string(ps[k]) + " out of range");
            if (ps[k] == child) throw std::invalid_argument("self-loop on node " + std::to_string(child));
            if (k > 0 && ps[k - 1] >= ps[k]) throw std::invalid_argument("parent sets must be sorted and unique");
        }
    }
    if (!is_acyclic(parents)) throw CyclicResult("parent sets contain a directed cycle");
}

}  // namespace

Dag::Dag(std::size_t node_count) : parents_(node_count) {
    if (node_count == 0) throw std::invalid_argument("a DAG needs at least one node");
}

Dag::Dag(std::size_t node_count, std::span<const Arc> arcs) : parents_(node_count) {
    for (const Arc& a : arcs) {
        if (a.from >= node_count || a.to >= node_count)
            throw IndexOutOfRange("arc endpoint out of range");
        parents_[a.to].push_back(a.from);
    }
    for (auto& ps : parents_) std::sort(ps.begin(), ps.end());
    validate(parents_);
}

Dag::Dag(ParentSets parents) : parents_(std::move(parents)) {
    for (auto& ps : parents_) std::sort(ps.begin(), ps.end());
    validate(parents_);
}

std::vector<NodeId> Dag::children(NodeId node) const {
    std::vector<NodeId> out;
    for (NodeId c = 0; c < parents_.size(); ++c)
        if (std::binary_search(parents_[c].begin(), parents_[c].end(), node)) out.push_back(c);
    return out;
}

bool Dag::has_arc(NodeId from, NodeId to) const {
    const auto& ps = parents_.at(to);
    return std::binary_search(ps.begin(), ps.end(), from);
}

std::size_t Dag::arc_count() const noexcept {
    std::size_t total = 0;
    for (const auto& ps : parents_) total += ps.size();
    return total;
}

std::vector<Arc> Dag::arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count());
    for (NodeId to = 0; to < parents_.size(); ++to)
        for (NodeId from : parents_[to]) out.push_back({from, to});
    std::sort(out.begin(), out.end());
    return out;
}

bool Dag::has_path(NodeId from, NodeId to) const {
    // Walk backwards from `to` through parent sets.
    std::vector<char> seen(parents_.size(), 0);
    std::vector<NodeId> stack(parents_.at(to).begin(), parents_.at(to).end());
    while (!stack.empty()) {
        NodeId node = stack.back();
        stack.pop_back();
        if (node == from) return true;
        if (seen[node]) continue;
        seen[node] = 1;
        for (NodeId p : parents_[node])
            if (!seen[p]) stack.push_back(p);
    }
    return false;
}

std::vector<NodeId> topological_order(const Dag& dag) {
    const std::size_t n = dag.node_count();
    std::vector<std::size_t> indegree(n);
    std::vector<std::vector<NodeId>> children(n);
    for (NodeId c = 0; c < n; ++c) {
        indegree[c] = dag.parents(c).size();
        for (NodeId p : dag.parents(c)) children[p].push_back(c);
    }
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (NodeId i = 0; i < n; ++i)
        if (indegree[i] == 0) ready.push(i);
    std::vector<NodeId> order;
    order.reserve(n);
    while (!ready.empty()) {
        NodeId node = ready.top();
        ready.pop();
        order.push_back(node);
        for (NodeId c : children[node])
            if (--indegree[c] == 0) ready.push(c);
    }
    return order;
}

bool would_create_cycle(const Dag& dag, const ArcMove& move) {
    const std::size_t n = dag.node_count();
    if (move.from >= n || move.to >= n) throw IndexOutOfRange("move endpoint out of range");
    if (move.from == move.to) throw InvalidMove("move endpoints must differ: " + to_string(move));
    const bool present = dag.has_arc(move.from, move.to);
    switch (move.kind) {
        case MoveKind::Add:
            if (present) throw InvalidMove("arc already present: " + to_string(move));
            if (dag.has_arc(move.to, move.from))
                throw InvalidMove("opposite arc present, use reverse: " + to_string(move));
            return dag.has_path(move.to, move.from);
        case MoveKind::Delete:
            if (!present) throw InvalidMove("arc absent: " + to_string(move));
            return false;
        case MoveKind::Reverse: {
            if (!present) throw InvalidMove("arc absent: " + to_string(move));
            // A cycle appears iff some other path from -> ... -> to exists.
            for (NodeId p : dag.parents(move.to))
                if (p != move.from && dag.has_path(move.from, p)) return true;
            return false;
        }
    }
    return false;
}

Dag apply_move(const Dag& dag, const ArcMove& move) {
    if (would_create_cycle(dag, move)) throw CyclicResult("move closes a directed cycle: " + to_string(move));
    ParentSets parents = dag.parent_sets();
    auto erase = [&](NodeId child, NodeId parent) {
        auto& ps = parents[child];
        ps.erase(std::find(ps.begin(), ps.end(), parent));
    };
    auto insert = [&](NodeId child, NodeId parent) {
        auto& ps = parents[child];
        ps.insert(std::upper_bound(ps.begin(), ps.end(), parent), parent);
    };
    switch (move.kind) {
        case MoveKind::Add: insert(move.to, move.from); break;
        case MoveKind::Delete: erase(move.to, move.from); break;
        case MoveKind::Reverse:
            erase(move.to, move.from);
            insert(move.from, move.to);
            break;
    }
    return Dag(std::move(parents));
}

}  // namespace bnsl
