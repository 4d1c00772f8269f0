#include "bnsl/scores.hpp"

#include <charconv>
#include <cmath>
#include <math.h>
#include <sstream>

#include "bnsl/errors.hpp"

namespace bnsl {

namespace {

double parse_positive(std::string_view text, std::string_view what) {
    double value = 0.0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value) || value <= 0.0)
        throw InputError(std::string(what) + " must be a positive number, got '" + std::string(text) + "'");
    return value;
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidPrior("imaginary sample size must be positive");
}

std::string format_number(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// BD score with the same hyperparameter `a` in every cell of every observed configuration.
double local_bd_uniform(const FamilyCounts& counts, double a) {
    const double r = static_cast<double>(counts.child_cardinality());
    double total = 0.0;
    for (const auto& [j, cells] : counts.observed()) {
        Count n_ij = 0;
        for (Count c : cells) {
            n_ij += c;
            total += log_rising(a, c);
        }
        total -= log_rising(r * a, n_ij);
    }
    return total;
}

double entropy_uniform(const FamilyCounts& counts, double a) {
    const double r = static_cast<double>(counts.child_cardinality());
    double h = 0.0;
    for (const auto& [j, cells] : counts.observed()) {
        double n_ij = 0.0;
        for (Count c : cells) n_ij += static_cast<double>(c);
        for (Count c : cells) {
            const double p = (a + static_cast<double>(c)) / (r * a + n_ij);
            if (p > 0.0) h -= p * std::log(p);
        }
    }
    return h;
}

}  // namespace

ScoreKind parse_score_kind(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const bool has_arg = colon != std::string_view::npos;
    const std::string_view arg = has_arg ? text.substr(colon + 1) : std::string_view{};
    if (name == "bdeu" || name == "bds") {
        const double alpha = has_arg ? parse_positive(arg, "alpha") : 1.0;
        if (name == "bdeu") return score::Bdeu{alpha};
        return score::Bds{alpha};
    }
    if (has_arg) throw InputError("score '" + std::string(name) + "' takes no parameter");
    if (name == "k2") return score::K2{};
    if (name == "jeffreys" || name == "bdj") return score::BdJeffreys{};
    if (name == "bic") return score::Bic{};
    if (name == "loglik") return score::LogLik{};
    throw InputError("unknown score '" + std::string(text) + "'");
}

std::string to_string(const ScoreKind& kind) {
    struct Visitor {
        std::string operator()(const score::Bdeu& s) const { return "bdeu:" + format_number(s.alpha); }
        std::string operator()(const score::Bds& s) const { return "bds:" + format_number(s.alpha); }
        std::string operator()(const score::K2&) const { return "k2"; }
        std::string operator()(const score::BdJeffreys&) const { return "jeffreys"; }
        std::string operator()(const score::Bic&) const { return "bic"; }
        std::string operator()(const score::LogLik&) const { return "loglik"; }
    };
    return std::visit(Visitor{}, kind);
}

double score_alpha(const ScoreKind& kind) {
    if (const auto* s = std::get_if<score::Bdeu>(&kind)) return s->alpha;
    if (const auto* s = std::get_if<score::Bds>(&kind)) return s->alpha;
    return 0.0;
}

double log_rising(double a, Count n) {
    if (n == 0) return 0.0;
    if (n <= 32) {
        double s = 0.0;
        for (Count m = 0; m < n; ++m) s += std::log(a + static_cast<double>(m));
        return s;
    }
    // lgamma_r leaves the global signgam alone, so concurrent searches do not race.
    int sign = 0;
    return ::lgamma_r(a + static_cast<double>(n), &sign) - ::lgamma_r(a, &sign);
}

double local_bd(const FamilyCounts& counts, const CellPrior& alpha_cell) {
    double total = 0.0;
    for (const auto& [j, cells] : counts.observed()) {
        double a_ij = 0.0;
        Count n_ij = 0;
        for (std::size_t k = 0; k < cells.size(); ++k) {
            const double a = alpha_cell(j, k);
            if (!(a >= 0.0) || !std::isfinite(a)) throw InvalidPrior("cell hyperparameters must be finite and >= 0");
            if (a == 0.0) {
                if (cells[k] > 0)
                    throw InvalidPrior("zero hyperparameter on an observed cell (j=" + std::to_string(j) +
                                       ", k=" + std::to_string(k) + ")");
                continue;
            }
            a_ij += a;
            n_ij += cells[k];
            total += log_rising(a, cells[k]);
        }
        total -= log_rising(a_ij, n_ij);
    }
    return total;
}

double local_bdeu(const FamilyCounts& counts, double alpha) {
    check_alpha(alpha);
    const double a = alpha / (static_cast<double>(counts.child_cardinality()) *
                              static_cast<double>(counts.nominal_config_count()));
    return local_bd_uniform(counts, a);
}

double local_bds(const FamilyCounts& counts, double alpha) {
    check_alpha(alpha);
    if (counts.observed_config_count() == 0) return 0.0;
    const double a = alpha / (static_cast<double>(counts.child_cardinality()) *
                              static_cast<double>(counts.observed_config_count()));
    return local_bd_uniform(counts, a);
}

double local_k2(const FamilyCounts& counts) { return local_bd_uniform(counts, 1.0); }

double local_bd_jeffreys(const FamilyCounts& counts) { return local_bd_uniform(counts, 0.5); }

double local_loglik(const FamilyCounts& counts) {
    if (counts.total() == 0) throw EmptyData("log-likelihood needs at least one observation");
    double ll = 0.0;
    for (const auto& [j, cells] : counts.observed()) {
        double n_ij = 0.0;
        for (Count c : cells) n_ij += static_cast<double>(c);
        for (Count c : cells)
            if (c > 0) ll += static_cast<double>(c) * std::log(static_cast<double>(c) / n_ij);
    }
    return ll;
}

double local_bic(const FamilyCounts& counts) {
    const double ll = local_loglik(counts);
    const double free = static_cast<double>(counts.child_cardinality() - 1) *
                        static_cast<double>(counts.nominal_config_count());
    return ll - 0.5 * free * std::log(static_cast<double>(counts.total()));
}

double local_score(const FamilyCounts& counts, const ScoreKind& kind) {
    struct Visitor {
        const FamilyCounts& c;
        double operator()(const score::Bdeu& s) const { return local_bdeu(c, s.alpha); }
        double operator()(const score::Bds& s) const { return local_bds(c, s.alpha); }
        double operator()(const score::K2&) const { return local_k2(c); }
        double operator()(const score::BdJeffreys&) const { return local_bd_jeffreys(c); }
        double operator()(const score::Bic&) const { return local_bic(c); }
        double operator()(const score::LogLik&) const { return local_loglik(c); }
    };
    return std::visit(Visitor{counts}, kind);
}

std::int64_t effective_params(const FamilyCounts& counts) {
    std::int64_t positive = 0;
    for (const auto& [j, cells] : counts.observed())
        for (Count c : cells)
            if (c > 0) ++positive;
    return positive - static_cast<std::int64_t>(counts.observed_config_count());
}

double posterior_entropy_bdeu(const FamilyCounts& counts, double alpha) {
    check_alpha(alpha);
    const double a = alpha / (static_cast<double>(counts.child_cardinality()) *
                              static_cast<double>(counts.nominal_config_count()));
    return entropy_uniform(counts, a);
}

double posterior_entropy_bds(const FamilyCounts& counts, double alpha) {
    check_alpha(alpha);
    if (counts.observed_config_count() == 0) return 0.0;
    const double a = alpha / (static_cast<double>(counts.child_cardinality()) *
                              static_cast<double>(counts.observed_config_count()));
    return entropy_uniform(counts, a);
}

double empirical_entropy(const FamilyCounts& counts) {
    if (counts.total() == 0) throw EmptyData("empirical entropy needs at least one observation");
    return entropy_uniform(counts, 0.0);
}

std::vector<double> node_scores(const Dag& dag, const Dataset& data, const ScoreKind& kind) {
    if (dag.node_count() != data.variable_count())
        throw DimensionMismatch("DAG has " + std::to_string(dag.node_count()) + " nodes, data has " +
                                std::to_string(data.variable_count()) + " variables");
    std::vector<double> out(dag.node_count());
    for (NodeId i = 0; i < dag.node_count(); ++i) out[i] = local_score(count_family(data, i, dag.parents(i)), kind);
    return out;
}

double network_score(const Dag& dag, const Dataset& data, const ScoreKind& kind) {
    double total = 0.0;
    for (double s : node_scores(dag, data, kind)) total += s;
    return total;
}

std::int64_t network_effective_params(const Dag& dag, const Dataset& data) {
    if (dag.node_count() != data.variable_count()) throw DimensionMismatch("DAG and data differ in size");
    std::int64_t total = 0;
    for (NodeId i = 0; i < dag.node_count(); ++i) total += effective_params(count_family(data, i, dag.parents(i)));
    return total;
}

}  // namespace bnsl
