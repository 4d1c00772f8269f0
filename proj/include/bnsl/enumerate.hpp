#ifndef BNSL_ENUMERATE_HPP
#define BNSL_ENUMERATE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "bnsl/cpdag.hpp"
#include "bnsl/graph.hpp"

namespace bnsl {

/// Largest node count accepted by the exhaustive routines (29281 DAGs).
inline constexpr std::size_t kMaxEnumerationNodes = 5;

/// Visits every labeled DAG on `n` nodes exactly once. The empty graph comes
/// first; the order is fixed and reproducible. Throws TooLarge for n > 5.
void for_each_dag(std::size_t n, const std::function<void(const Dag&)>& visit);

std::vector<Dag> enumerate_dags(std::size_t n);

/// Exact arc statistics of the uniform distribution over all DAGs on n nodes.
///
/// Arc variables use the signed coding A_ij = +1 (i -> j), -1 (j -> i),
/// 0 (absent) for i < j; correlations are Pearson correlations of these.
struct PriorCensus {
    std::size_t node_count = 0;
    std::uint64_t n_dags = 0;
    /// Row-major n x n: entry [i * n + j] is P(i -> j). Diagonal is zero.
    std::vector<double> arc_forward_prob;
    /// Entry [i * n + j] is P(j -> i).
    std::vector<double> arc_backward_prob;
    /// Entry [i * n + j] is P(i, j non-adjacent).
    std::vector<double> arc_absent_prob;
    std::map<std::pair<Edge, Edge>, double> arc_pair_correlation;

    double forward(NodeId i, NodeId j) const { return arc_forward_prob.at(i * node_count + j); }
    double backward(NodeId i, NodeId j) const { return arc_backward_prob.at(i * node_count + j); }
    double absent(NodeId i, NodeId j) const { return arc_absent_prob.at(i * node_count + j); }
    double correlation(Edge e, Edge f) const;
};

PriorCensus census_uniform_prior(std::size_t n);

}  // namespace bnsl

#endif  // BNSL_ENUMERATE_HPP
