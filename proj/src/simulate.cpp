#include "bnsl/simulate.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "bnsl/cpdag.hpp"
#include "bnsl/errors.hpp"
#include "bnsl/search.hpp"

namespace bnsl {

namespace {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string score_name(const ScoreKind& kind) {
    const std::string full = to_string(kind);
    return full.substr(0, full.find(':'));
}

std::string prior_name(const PriorKind& kind) {
    const std::string full = to_string(kind);
    return full.substr(0, full.find(':'));
}

std::optional<double> prior_parameter(const PriorKind& kind) {
    if (const auto* p = std::get_if<prior::MarginalUniform>(&kind)) return p->beta;
    if (const auto* p = std::get_if<prior::MarginalUniformSparse>(&kind)) return p->c;
    return std::nullopt;
}

std::size_t training_size(double ratio, std::uint64_t params) {
    const double n = std::ceil(ratio * static_cast<double>(params));
    return n < 1.0 ? 1 : static_cast<std::size_t>(n);
}

}  // namespace

Strategy parse_strategy(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        throw InputError("strategy must be written SCORE/PRIOR, got '" + std::string(text) + "'");
    return {parse_score_kind(text.substr(0, slash)), parse_prior_kind(text.substr(slash + 1))};
}

std::string to_string(const Strategy& strategy) {
    return to_string(strategy.score) + "/" + to_string(strategy.prior);
}

void validate(const SimulationConfig& config) {
    if (config.replicates == 0) throw std::invalid_argument("replicates must be >= 1");
    if (config.ratios.empty()) throw std::invalid_argument("at least one n/p ratio is required");
    for (double r : config.ratios)
        if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("n/p ratios must be positive");
    if (config.strategies.empty()) throw std::invalid_argument("at least one strategy is required");
    if (config.test_set_size == 0) throw std::invalid_argument("test set size must be positive");
    if (!(config.fit_alpha > 0.0)) throw std::invalid_argument("fit alpha must be positive");
}

std::vector<ResultRow> run_simulation(const Bn& reference, const SimulationConfig& config) {
    validate(config);
    const std::uint64_t params = nominal_parameter_count(reference.variables(), reference.dag());
    const Cpdag reference_cpdag = to_cpdag(reference.dag());
    const double reference_arcs = static_cast<double>(reference.dag().arc_count());

    const std::size_t tasks = config.ratios.size() * config.replicates;
    std::vector<std::vector<ResultRow>> results(tasks);

    auto run_task = [&](std::size_t task) {
        const std::size_t ratio_index = task / config.replicates;
        const std::size_t replicate = task % config.replicates;
        const double ratio = config.ratios[ratio_index];
        Rng rng = Rng::stream(config.seed, ratio_index, replicate);
        const Dataset train = sample(reference, training_size(ratio, params), rng);
        const Dataset test = sample(reference, config.test_set_size, rng);

        for (const Strategy& strategy : config.strategies) {
            ResultRow row;
            row.network = config.network_name;
            row.n_over_p = ratio;
            row.replicate = replicate;
            row.score = score_name(strategy.score);
            row.prior = prior_name(strategy.prior);
            if (const double a = score_alpha(strategy.score); a > 0.0) row.alpha = a;
            row.beta_or_c = prior_parameter(strategy.prior);
            try {
                LearnConfig learn;
                learn.max_parents = config.max_parents;
                const auto start = std::chrono::steady_clock::now();
                const LearnResult learned = hill_climb(train, strategy.score, strategy.prior, learn);
                const auto stop = std::chrono::steady_clock::now();
                const Bn fitted = fit(learned.dag, train, config.fit_alpha);
                row.shd = shd(to_cpdag(learned.dag), reference_cpdag);
                row.arcs = learned.dag.arc_count();
                row.arcs_ratio = reference_arcs > 0 ? static_cast<double>(row.arcs) / reference_arcs : 0.0;
                row.loglik = predictive_loglik(fitted, test) / -static_cast<double>(config.test_set_size);
                if (config.record_timing) row.seconds = std::chrono::duration<double>(stop - start).count();
                if (learned.iteration_limit_reached) row.error = "iteration limit reached";
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            results[task].push_back(std::move(row));
        }
    };

    const std::size_t workers = std::max<std::size_t>(1, std::min(config.threads, tasks));
    if (workers == 1) {
        for (std::size_t t = 0; t < tasks; ++t) run_task(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t t = next++; t < tasks; t = next++) run_task(t);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<ResultRow> rows;
    for (auto& chunk : results)
        for (auto& row : chunk) rows.push_back(std::move(row));
    return rows;
}

std::string write_results_csv(const std::vector<ResultRow>& rows) {
    std::string out = "# bnsl results v1\n";
    out += kResultsColumns;
    out += "\n";
    for (const auto& r : rows) {
        std::string error = r.error;
        for (char& c : error)
            if (c == ',' || c == '\n' || c == '\r') c = ';';
        const bool ok = r.error.empty() || r.error == "iteration limit reached";
        out += r.network + "," + format_double(r.n_over_p) + "," + std::to_string(r.replicate) + "," + r.score + "," +
               r.prior + "," + (r.alpha ? format_double(*r.alpha) : "") + "," +
               (r.beta_or_c ? format_double(*r.beta_or_c) : "") + ",";
        if (ok) {
            out += std::to_string(r.shd) + "," + std::to_string(r.arcs) + "," + format_double(r.arcs_ratio) + "," +
                   format_double(r.loglik) + "," + format_double(r.seconds);
        } else {
            out += ",,,,";
        }
        out += "," + error + "\n";
    }
    return out;
}

Bn make_synthetic_reference(const SyntheticSpec& spec) {
    if (spec.nodes < 2) throw std::invalid_argument("synthetic network needs at least two nodes");
    if (spec.min_levels < 2 || spec.max_levels < spec.min_levels)
        throw std::invalid_argument("synthetic level range must satisfy 2 <= min <= max");
    Rng rng(spec.seed);

    // Random node order; arcs always point forward in it.
    std::vector<NodeId> order(spec.nodes);
    for (NodeId i = 0; i < spec.nodes; ++i) order[i] = i;
    for (std::size_t i = spec.nodes - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);

    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t a = 0; a < spec.nodes; ++a)
        for (std::size_t b = a + 1; b < spec.nodes; ++b) slots.emplace_back(a, b);
    for (std::size_t i = slots.size() - 1; i > 0; --i) std::swap(slots[i], slots[rng.below(i + 1)]);

    std::vector<Arc> arcs;
    std::vector<std::size_t> indegree(spec.nodes, 0);
    for (const auto& [a, b] : slots) {
        if (arcs.size() == spec.arcs) break;
        const NodeId from = order[a];
        const NodeId to = order[b];
        if (indegree[to] >= spec.max_parents) continue;
        ++indegree[to];
        arcs.push_back({from, to});
    }
    if (arcs.size() != spec.arcs) throw std::invalid_argument("cannot place that many arcs under max_parents");
    Dag dag(spec.nodes, arcs);

    std::vector<Variable> variables;
    for (NodeId i = 0; i < spec.nodes; ++i) {
        const std::size_t r = spec.min_levels + rng.below(spec.max_levels - spec.min_levels + 1);
        std::vector<std::string> levels;
        for (std::size_t k = 0; k < r; ++k) levels.push_back("s" + std::to_string(k));
        variables.emplace_back("V" + std::to_string(i + 1), std::move(levels));
    }

    std::vector<Cpt> cpts;
    for (NodeId i = 0; i < spec.nodes; ++i) {
        const std::size_t r = variables[i].cardinality();
        std::vector<std::size_t> parent_cards;
        std::size_t q = 1;
        for (NodeId p : dag.parents(i)) {
            parent_cards.push_back(variables[p].cardinality());
            q *= variables[p].cardinality();
        }
        std::vector<double> table(q * r);
        for (std::size_t j = 0; j < q; ++j) {
            // Squared unit exponentials: Dirichlet-like rows with extra skew.
            double sum = 0.0;
            for (std::size_t k = 0; k < r; ++k) {
                const double e = -std::log1p(-rng.uniform());
                table[j * r + k] = e * e + 1e-3;
                sum += table[j * r + k];
            }
            for (std::size_t k = 0; k < r; ++k) table[j * r + k] /= sum;
        }
        cpts.emplace_back(r, std::move(parent_cards), std::move(table));
    }
    return Bn(std::move(dag), std::move(variables), std::move(cpts), "synthetic" + std::to_string(spec.nodes));
}

}  // namespace bnsl
