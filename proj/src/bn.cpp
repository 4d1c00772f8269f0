#include "bnsl/bn.hpp"

#include <cmath>
#include <stdexcept>

#include "bnsl/errors.hpp"

namespace bnsl {

Cpt::Cpt(std::size_t child_cardinality, std::vector<std::size_t> parent_cardinalities, std::vector<double> table)
    : r_(child_cardinality), parent_cards_(std::move(parent_cardinalities)), table_(std::move(table)) {
    if (r_ == 0) throw std::invalid_argument("CPT child cardinality must be positive");
    std::size_t q = 1;
    for (std::size_t c : parent_cards_) {
        if (c == 0) throw std::invalid_argument("CPT parent cardinality must be positive");
        q *= c;
    }
    if (table_.size() != q * r_)
        throw std::invalid_argument("CPT has " + std::to_string(table_.size()) + " entries, expected " +
                                    std::to_string(q * r_));
    for (std::size_t j = 0; j < q; ++j) {
        double sum = 0.0;
        for (std::size_t k = 0; k < r_; ++k) {
            const double p = table_[j * r_ + k];
            if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("CPT entries must lie in [0, 1]");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument("CPT row " + std::to_string(j) + " sums to " + std::to_string(sum));
    }
}

std::span<const double> Cpt::row(std::size_t config) const {
    if (config >= config_count()) throw IndexOutOfRange("CPT row out of range");
    return std::span<const double>(table_).subspan(config * r_, r_);
}

Bn::Bn(Dag dag, std::vector<Variable> variables, std::vector<Cpt> cpts, std::string name)
    : dag_(std::move(dag)), variables_(std::move(variables)), cpts_(std::move(cpts)), name_(std::move(name)) {
    if (dag_.node_count() != variables_.size() || cpts_.size() != variables_.size())
        throw DimensionMismatch("network needs one variable and one CPT per node");
    for (NodeId i = 0; i < variables_.size(); ++i) {
        const Cpt& cpt = cpts_[i];
        if (cpt.child_cardinality() != variables_[i].cardinality())
            throw std::invalid_argument("CPT of '" + variables_[i].name() + "' has the wrong child cardinality");
        const auto& ps = dag_.parents(i);
        if (cpt.parent_cardinalities().size() != ps.size())
            throw std::invalid_argument("CPT of '" + variables_[i].name() + "' has the wrong number of parents");
        for (std::size_t k = 0; k < ps.size(); ++k)
            if (cpt.parent_cardinalities()[k] != variables_[ps[k]].cardinality())
                throw std::invalid_argument("CPT of '" + variables_[i].name() + "' has a mismatched parent cardinality");
    }
}

std::size_t Bn::config_of(NodeId node, std::span<const Level> levels) const {
    std::size_t j = 0;
    for (NodeId p : dag_.parents(node)) j = j * variables_[p].cardinality() + levels[p];
    return j;
}

Bn fit(const Dag& dag, const Dataset& data, double alpha, FitPrior prior) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidPrior("imaginary sample size must be positive");
    if (dag.node_count() != data.variable_count()) throw DimensionMismatch("DAG and data differ in size");
    std::vector<Cpt> cpts;
    cpts.reserve(dag.node_count());
    for (NodeId i = 0; i < dag.node_count(); ++i) {
        const FamilyCounts counts = count_family(data, i, dag.parents(i));
        const std::size_t r = counts.child_cardinality();
        const auto q = static_cast<std::size_t>(counts.nominal_config_count());
        const double q_eff = prior == FitPrior::Bdeu ? static_cast<double>(q)
                                                     : static_cast<double>(counts.observed_config_count());
        const double a = q_eff > 0.0 ? alpha / (static_cast<double>(r) * q_eff) : 0.0;

        std::vector<double> table(q * r, 1.0 / static_cast<double>(r));
        for (const auto& [j, cells] : counts.observed()) {
            double n_ij = 0.0;
            for (Count c : cells) n_ij += static_cast<double>(c);
            const double denom = static_cast<double>(r) * a + n_ij;
            double sum = 0.0;
            for (std::size_t k = 0; k < r; ++k) {
                table[j * r + k] = (a + static_cast<double>(cells[k])) / denom;
                sum += table[j * r + k];
            }
            for (std::size_t k = 0; k < r; ++k) table[j * r + k] /= sum;
        }
        std::vector<std::size_t> parent_cards;
        for (NodeId p : dag.parents(i)) parent_cards.push_back(data.variable(p).cardinality());
        cpts.emplace_back(r, std::move(parent_cards), std::move(table));
    }
    return Bn(dag, data.variables(), std::move(cpts));
}

Dataset sample(const Bn& bn, std::size_t n, Rng& rng) {
    const auto order = topological_order(bn.dag());
    const std::size_t v = bn.node_count();
    std::vector<std::vector<Level>> columns(v, std::vector<Level>(n));
    std::vector<Level> row(v);
    for (std::size_t r = 0; r < n; ++r) {
        for (NodeId node : order) {
            const auto probs = bn.cpt(node).row(bn.config_of(node, row));
            const double u = rng.uniform();
            double cumulative = 0.0;
            std::size_t level = probs.size() - 1;
            for (std::size_t k = 0; k < probs.size(); ++k) {
                cumulative += probs[k];
                if (u < cumulative) {
                    level = k;
                    break;
                }
            }
            // Round-off can leave u above the final cumulative sum; skip zero-probability tail levels.
            while (probs[level] == 0.0 && level > 0) --level;
            row[node] = static_cast<Level>(level);
        }
        for (NodeId node = 0; node < v; ++node) columns[node][r] = row[node];
    }
    return Dataset::from_columns(bn.variables(), std::move(columns));
}

Dataset sample(const Bn& bn, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return sample(bn, n, rng);
}

double predictive_loglik(const Bn& bn, const Dataset& test) {
    if (test.variables() != bn.variables())
        throw SchemaMismatch("test data variables or levels differ from the network's");
    double total = 0.0;
    std::vector<Level> row(bn.node_count());
    for (std::size_t r = 0; r < test.row_count(); ++r) {
        for (NodeId v = 0; v < bn.node_count(); ++v) row[v] = test.at(r, v);
        for (NodeId v = 0; v < bn.node_count(); ++v) total += std::log(bn.cpt(v).prob(bn.config_of(v, row), row[v]));
    }
    return total;
}

}  // namespace bnsl
