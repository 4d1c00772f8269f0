#include "bnsl/data.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "bnsl/errors.hpp"

namespace bnsl {

Variable::Variable(std::string name, std::vector<std::string> levels)
    : name_(std::move(name)), levels_(std::move(levels)) {
    if (levels_.empty()) throw std::invalid_argument("variable '" + name_ + "' needs at least one level");
    std::set<std::string> seen;
    for (const auto& l : levels_)
        if (!seen.insert(l).second)
            throw std::invalid_argument("variable '" + name_ + "' declares level '" + l + "' twice");
}

std::optional<Level> Variable::level_index(const std::string& label) const {
    auto it = std::find(levels_.begin(), levels_.end(), label);
    if (it == levels_.end()) return std::nullopt;
    return static_cast<Level>(it - levels_.begin());
}

Dataset::Dataset(std::vector<Variable> variables)
    : variables_(std::move(variables)), columns_(variables_.size()) {}

Dataset::Dataset(std::vector<Variable> variables, const std::vector<std::vector<Level>>& rows)
    : variables_(std::move(variables)), columns_(variables_.size()), rows_(rows.size()) {
    for (auto& col : columns_) col.reserve(rows_);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != variables_.size())
            throw std::invalid_argument("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                        " entries, expected " + std::to_string(variables_.size()));
        for (std::size_t v = 0; v < variables_.size(); ++v) {
            if (rows[r][v] >= variables_[v].cardinality())
                throw IndexOutOfRange("row " + std::to_string(r) + ": level index out of range for '" +
                                      variables_[v].name() + "'");
            columns_[v].push_back(rows[r][v]);
        }
    }
}

Dataset Dataset::from_columns(std::vector<Variable> variables, std::vector<std::vector<Level>> columns) {
    if (columns.size() != variables.size()) throw std::invalid_argument("one column per variable required");
    Dataset out(std::move(variables));
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (std::size_t v = 0; v < columns.size(); ++v) {
        if (columns[v].size() != rows) throw std::invalid_argument("columns differ in length");
        for (Level l : columns[v])
            if (l >= out.variables_[v].cardinality())
                throw IndexOutOfRange("level index out of range for '" + out.variables_[v].name() + "'");
    }
    out.columns_ = std::move(columns);
    out.rows_ = rows;
    return out;
}

std::optional<NodeId> Dataset::index_of(const std::string& name) const {
    for (NodeId v = 0; v < variables_.size(); ++v)
        if (variables_[v].name() == name) return v;
    return std::nullopt;
}

std::vector<Level> Dataset::row(std::size_t r) const {
    if (r >= rows_) throw IndexOutOfRange("row index out of range");
    std::vector<Level> out(variables_.size());
    for (std::size_t v = 0; v < variables_.size(); ++v) out[v] = columns_[v][r];
    return out;
}

Dataset Dataset::concat(const Dataset& other) const {
    if (variables_ != other.variables_) throw SchemaMismatch("cannot concatenate datasets with different variables");
    Dataset out = *this;
    for (std::size_t v = 0; v < variables_.size(); ++v)
        out.columns_[v].insert(out.columns_[v].end(), other.columns_[v].begin(), other.columns_[v].end());
    out.rows_ += other.rows_;
    return out;
}

FamilyCounts::FamilyCounts(std::size_t child_cardinality, ConfigIndex nominal_config_count,
                           std::map<ConfigIndex, std::vector<Count>> observed)
    : r_(child_cardinality), q_(nominal_config_count) {
    if (r_ == 0) throw std::invalid_argument("child cardinality must be positive");
    if (q_ == 0) throw std::invalid_argument("nominal configuration count must be positive");
    for (auto& [j, cells] : observed) {
        if (j >= q_) throw IndexOutOfRange("configuration index out of range");
        if (cells.size() != r_) throw std::invalid_argument("count row length differs from child cardinality");
        Count row = 0;
        for (Count c : cells) row += c;
        if (row == 0) continue;
        total_ += row;
        observed_.emplace(j, std::move(cells));
    }
}

Count FamilyCounts::config_total(ConfigIndex j) const {
    auto it = observed_.find(j);
    if (it == observed_.end()) return 0;
    Count row = 0;
    for (Count c : it->second) row += c;
    return row;
}

std::size_t FamilyCounts::positive_cells(ConfigIndex j) const {
    auto it = observed_.find(j);
    if (it == observed_.end()) return 0;
    return static_cast<std::size_t>(std::count_if(it->second.begin(), it->second.end(), [](Count c) { return c > 0; }));
}

ConfigIndex config_count(const std::vector<Variable>& variables, std::span<const NodeId> nodes) {
    ConfigIndex q = 1;
    for (NodeId p : nodes) {
        if (p >= variables.size()) throw IndexOutOfRange("node index " + std::to_string(p) + " out of range");
        const ConfigIndex r = variables[p].cardinality();
        if (q > std::numeric_limits<ConfigIndex>::max() / r)
            throw ConfigOverflow("parent configuration count exceeds the 64-bit range");
        q *= r;
    }
    return q;
}

FamilyCounts count_family(const Dataset& data, NodeId child, std::span<const NodeId> parents) {
    const auto& vars = data.variables();
    if (child >= vars.size()) throw IndexOutOfRange("child index " + std::to_string(child) + " out of range");
    std::vector<NodeId> sorted(parents.begin(), parents.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (std::binary_search(sorted.begin(), sorted.end(), child))
        throw IndexOutOfRange("node " + std::to_string(child) + " cannot be its own parent");

    const ConfigIndex q = config_count(vars, sorted);
    const std::size_t r = vars[child].cardinality();
    const std::size_t n = data.row_count();
    const auto child_col = data.column(child);

    std::vector<ConfigIndex> key(n, 0);
    for (NodeId p : sorted) {
        const auto col = data.column(p);
        const ConfigIndex radix = vars[p].cardinality();
        for (std::size_t row = 0; row < n; ++row) key[row] = key[row] * radix + col[row];
    }

    std::map<ConfigIndex, std::vector<Count>> observed;
    constexpr ConfigIndex kDenseLimit = 1 << 14;
    if (q <= kDenseLimit) {
        std::vector<Count> dense(static_cast<std::size_t>(q) * r, 0);
        for (std::size_t row = 0; row < n; ++row) ++dense[key[row] * r + child_col[row]];
        for (ConfigIndex j = 0; j < q; ++j) {
            auto first = dense.begin() + static_cast<std::ptrdiff_t>(j * r);
            if (std::any_of(first, first + static_cast<std::ptrdiff_t>(r), [](Count c) { return c > 0; }))
                observed.emplace(j, std::vector<Count>(first, first + static_cast<std::ptrdiff_t>(r)));
        }
    } else {
        for (std::size_t row = 0; row < n; ++row) {
            auto [it, inserted] = observed.try_emplace(key[row]);
            if (inserted) it->second.assign(r, 0);
            ++it->second[child_col[row]];
        }
    }
    return FamilyCounts(r, q, std::move(observed));
}

std::uint64_t nominal_parameter_count(const std::vector<Variable>& variables, const Dag& dag) {
    if (dag.node_count() != variables.size()) throw DimensionMismatch("DAG and variables differ in size");
    std::uint64_t p = 0;
    for (NodeId i = 0; i < variables.size(); ++i) {
        const ConfigIndex q = config_count(variables, dag.parents(i));
        const std::uint64_t free = variables[i].cardinality() - 1;
        if (free != 0 && q > std::numeric_limits<std::uint64_t>::max() / free)
            throw ConfigOverflow("parameter count exceeds the 64-bit range");
        const std::uint64_t term = free * q;
        if (p > std::numeric_limits<std::uint64_t>::max() - term)
            throw ConfigOverflow("parameter count exceeds the 64-bit range");
        p += term;
    }
    return p;
}

}  // namespace bnsl
