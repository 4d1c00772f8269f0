#include "bnsl/enumerate.hpp"

#include <cmath>

#include "bnsl/errors.hpp"

namespace bnsl {

namespace {

void check_size(std::size_t n) {
    if (n == 0) throw std::invalid_argument("enumeration needs at least one node");
    if (n > kMaxEnumerationNodes)
        throw TooLarge("exhaustive enumeration is limited to " + std::to_string(kMaxEnumerationNodes) +
                       " nodes, got " + std::to_string(n));
}

}  // namespace

void for_each_dag(std::size_t n, const std::function<void(const Dag&)>& visit) {
    check_size(n);
    std::vector<Edge> pairs;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    // Base-3 odometer over pair states: 0 absent, 1 a -> b, 2 b -> a.
    std::vector<int> digit(pairs.size(), 0);
    ParentSets parents(n);
    while (true) {
        for (auto& ps : parents) ps.clear();
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (digit[k] == 1) parents[pairs[k].b].push_back(pairs[k].a);
            else if (digit[k] == 2) parents[pairs[k].a].push_back(pairs[k].b);
        }
        if (is_acyclic(parents)) visit(Dag(parents));

        std::size_t k = 0;
        while (k < digit.size() && digit[k] == 2) digit[k++] = 0;
        if (k == digit.size()) break;
        ++digit[k];
    }
}

std::vector<Dag> enumerate_dags(std::size_t n) {
    std::vector<Dag> out;
    for_each_dag(n, [&](const Dag& g) { out.push_back(g); });
    return out;
}

double PriorCensus::correlation(Edge e, Edge f) const {
    auto it = arc_pair_correlation.find({e, f});
    if (it == arc_pair_correlation.end()) it = arc_pair_correlation.find({f, e});
    if (it == arc_pair_correlation.end()) throw IndexOutOfRange("no correlation recorded for that edge pair");
    return it->second;
}

PriorCensus census_uniform_prior(std::size_t n) {
    check_size(n);
    std::vector<Edge> pairs;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const std::size_t m = pairs.size();

    std::vector<std::uint64_t> forward(n * n, 0);
    std::vector<std::int64_t> sum(m, 0);
    std::vector<std::int64_t> sum_sq(m, 0);
    std::vector<std::int64_t> cross(m * m, 0);
    std::uint64_t total = 0;
    std::vector<int> value(m);

    for_each_dag(n, [&](const Dag& g) {
        ++total;
        for (std::size_t k = 0; k < m; ++k) {
            const auto [a, b] = pairs[k];
            value[k] = g.has_arc(a, b) ? 1 : (g.has_arc(b, a) ? -1 : 0);
            if (value[k] == 1) ++forward[a * n + b];
            if (value[k] == -1) ++forward[b * n + a];
            sum[k] += value[k];
            sum_sq[k] += value[k] * value[k];
        }
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t l = k + 1; l < m; ++l) cross[k * m + l] += value[k] * value[l];
    });

    PriorCensus census;
    census.node_count = n;
    census.n_dags = total;
    census.arc_forward_prob.assign(n * n, 0.0);
    census.arc_backward_prob.assign(n * n, 0.0);
    census.arc_absent_prob.assign(n * n, 0.0);
    const double t = static_cast<double>(total);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 0; j < n; ++j) {
            if (i == j) continue;
            const std::uint64_t fwd = forward[i * n + j];
            const std::uint64_t bwd = forward[j * n + i];
            census.arc_forward_prob[i * n + j] = static_cast<double>(fwd) / t;
            census.arc_backward_prob[i * n + j] = static_cast<double>(bwd) / t;
            census.arc_absent_prob[i * n + j] = static_cast<double>(total - fwd - bwd) / t;
        }

    // Integer moments keep the covariance numerator exact: t*E[xy] - E[x]E[y]*t^2.
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l) {
            const double cov = static_cast<double>(static_cast<std::int64_t>(total) * cross[k * m + l] -
                                                   sum[k] * sum[l]);
            const double var_k =
                static_cast<double>(static_cast<std::int64_t>(total) * sum_sq[k] - sum[k] * sum[k]);
            const double var_l =
                static_cast<double>(static_cast<std::int64_t>(total) * sum_sq[l] - sum[l] * sum[l]);
            census.arc_pair_correlation[{pairs[k], pairs[l]}] = cov / std::sqrt(var_k * var_l);
        }
    return census;
}

}  // namespace bnsl
