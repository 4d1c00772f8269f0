#include "bnsl/cpdag.hpp"

#include <stdexcept>
#include <vector>

#include "bnsl/errors.hpp"

namespace bnsl {

Cpdag::Cpdag(std::size_t node_count, std::set<Arc> directed, std::set<Edge> undirected)
    : node_count_(node_count), directed_(std::move(directed)), undirected_(std::move(undirected)) {
    if (node_count_ == 0) throw std::invalid_argument("a CPDAG needs at least one node");
    for (const Arc& arc : directed_) {
        if (arc.from >= node_count_ || arc.to >= node_count_) throw IndexOutOfRange("arc endpoint out of range");
        if (arc.from == arc.to) throw std::invalid_argument("self-loop in CPDAG");
        if (directed_.count({arc.to, arc.from}) || undirected_.count(Edge(arc.from, arc.to)))
            throw std::invalid_argument("pair appears more than once in CPDAG");
    }
    for (const Edge& e : undirected_) {
        if (e.b >= node_count_) throw IndexOutOfRange("edge endpoint out of range");
        if (e.a == e.b) throw std::invalid_argument("self-loop in CPDAG");
    }
}

EdgeState Cpdag::state(NodeId x, NodeId y) const {
    const Edge e(x, y);
    if (directed_.count({e.a, e.b})) return EdgeState::Forward;
    if (directed_.count({e.b, e.a})) return EdgeState::Backward;
    if (undirected_.count(e)) return EdgeState::Undirected;
    return EdgeState::None;
}

namespace {

class Pattern {
public:
    explicit Pattern(const Dag& dag) : n_(dag.node_count()), adj_(n_ * n_, 0), dir_(n_ * n_, 0) {
        for (const Arc& arc : dag.arcs()) {
            adj_[at(arc.from, arc.to)] = 1;
            adj_[at(arc.to, arc.from)] = 1;
        }
        // Unshielded colliders a -> c <- b.
        for (NodeId c = 0; c < n_; ++c) {
            const auto& ps = dag.parents(c);
            for (std::size_t x = 0; x < ps.size(); ++x)
                for (std::size_t y = x + 1; y < ps.size(); ++y)
                    if (!adjacent(ps[x], ps[y])) {
                        dir_[at(ps[x], c)] = 1;
                        dir_[at(ps[y], c)] = 1;
                    }
        }
    }

    void close() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (NodeId a = 0; a < n_; ++a)
                for (NodeId b = 0; b < n_; ++b)
                    if (undirected(a, b) && (rule1(a, b) || rule2(a, b) || rule3(a, b))) {
                        dir_[at(a, b)] = 1;
                        changed = true;
                    }
        }
    }

    Cpdag result() const {
        std::set<Arc> directed;
        std::set<Edge> reversible;
        for (NodeId a = 0; a < n_; ++a)
            for (NodeId b = 0; b < n_; ++b) {
                if (dir_[at(a, b)]) directed.insert({a, b});
                else if (a < b && undirected(a, b)) reversible.insert(Edge(a, b));
            }
        return Cpdag(n_, std::move(directed), std::move(reversible));
    }

private:
    std::size_t at(NodeId a, NodeId b) const { return a * n_ + b; }
    bool adjacent(NodeId a, NodeId b) const { return adj_[at(a, b)] != 0; }
    bool directed(NodeId a, NodeId b) const { return dir_[at(a, b)] != 0; }
    bool undirected(NodeId a, NodeId b) const {
        return adjacent(a, b) && !directed(a, b) && !directed(b, a);
    }

    // c -> a - b with c, b non-adjacent orients a -> b.
    bool rule1(NodeId a, NodeId b) const {
        for (NodeId c = 0; c < n_; ++c)
            if (c != b && directed(c, a) && !adjacent(c, b)) return true;
        return false;
    }

    // a -> c -> b with a - b orients a -> b.
    bool rule2(NodeId a, NodeId b) const {
        for (NodeId c = 0; c < n_; ++c)
            if (directed(a, c) && directed(c, b)) return true;
        return false;
    }

    // a - c -> b and a - d -> b with c, d non-adjacent orients a -> b.
    bool rule3(NodeId a, NodeId b) const {
        for (NodeId c = 0; c < n_; ++c) {
            if (!undirected(a, c) || !directed(c, b)) continue;
            for (NodeId d = c + 1; d < n_; ++d)
                if (undirected(a, d) && directed(d, b) && !adjacent(c, d)) return true;
        }
        return false;
    }

    std::size_t n_;
    std::vector<char> adj_;
    std::vector<char> dir_;
};

}  // namespace

Cpdag to_cpdag(const Dag& dag) {
    Pattern pattern(dag);
    pattern.close();
    return pattern.result();
}

std::size_t shd(const Cpdag& a, const Cpdag& b) {
    if (a.node_count() != b.node_count())
        throw DimensionMismatch("SHD needs equal node counts (" + std::to_string(a.node_count()) + " vs " +
                                std::to_string(b.node_count()) + ")");
    std::size_t distance = 0;
    for (NodeId x = 0; x < a.node_count(); ++x)
        for (NodeId y = x + 1; y < a.node_count(); ++y)
            if (a.state(x, y) != b.state(x, y)) ++distance;
    return distance;
}

std::size_t shd_dag(const Dag& a, const Dag& b) {
    if (a.node_count() != b.node_count())
        throw DimensionMismatch("SHD needs equal node counts (" + std::to_string(a.node_count()) + " vs " +
                                std::to_string(b.node_count()) + ")");
    std::size_t distance = 0;
    for (NodeId x = 0; x < a.node_count(); ++x)
        for (NodeId y = x + 1; y < a.node_count(); ++y)
            if (a.has_arc(x, y) != b.has_arc(x, y) || a.has_arc(y, x) != b.has_arc(y, x)) ++distance;
    return distance;
}

}  // namespace bnsl
