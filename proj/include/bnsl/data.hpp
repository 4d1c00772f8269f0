#ifndef BNSL_DATA_HPP
#define BNSL_DATA_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bnsl/graph.hpp"

namespace bnsl {

using Level = std::uint32_t;
using ConfigIndex = std::uint64_t;
using Count = std::uint64_t;

/// A categorical variable with its declared, ordered level set.
class Variable {
public:
    Variable(std::string name, std::vector<std::string> levels);

    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& levels() const noexcept { return levels_; }
    std::size_t cardinality() const noexcept { return levels_.size(); }
    std::optional<Level> level_index(const std::string& label) const;

    bool operator==(const Variable&) const = default;

private:
    std::string name_;
    std::vector<std::string> levels_;
};

/// Complete categorical data, stored column-major as level indices.
class Dataset {
public:
    explicit Dataset(std::vector<Variable> variables);
    /// `rows[r][v]` is the level index of variable v in record r.
    Dataset(std::vector<Variable> variables, const std::vector<std::vector<Level>>& rows);

    static Dataset from_columns(std::vector<Variable> variables, std::vector<std::vector<Level>> columns);

    std::size_t row_count() const noexcept { return rows_; }
    std::size_t variable_count() const noexcept { return variables_.size(); }
    const std::vector<Variable>& variables() const noexcept { return variables_; }
    const Variable& variable(NodeId v) const { return variables_.at(v); }
    std::optional<NodeId> index_of(const std::string& name) const;

    Level at(std::size_t row, NodeId v) const { return columns_.at(v).at(row); }
    std::span<const Level> column(NodeId v) const { return columns_.at(v); }
    std::vector<Level> row(std::size_t r) const;

    /// Rows of `this` followed by rows of `other`; variables must be identical.
    Dataset concat(const Dataset& other) const;

    bool operator==(const Dataset&) const = default;

private:
    std::vector<Variable> variables_;
    std::vector<std::vector<Level>> columns_;
    std::size_t rows_ = 0;
};

/// Contingency statistics of one child given its parents.
///
/// Only observed parent configurations are stored. Configuration indices are
/// mixed-radix over the parents in ascending node order, the first (lowest)
/// parent being the most significant digit.
class FamilyCounts {
public:
    FamilyCounts(std::size_t child_cardinality, ConfigIndex nominal_config_count,
                 std::map<ConfigIndex, std::vector<Count>> observed);

    std::size_t child_cardinality() const noexcept { return r_; }
    ConfigIndex nominal_config_count() const noexcept { return q_; }
    const std::map<ConfigIndex, std::vector<Count>>& observed() const noexcept { return observed_; }

    /// q~: number of configurations with n_ij > 0.
    std::size_t observed_config_count() const noexcept { return observed_.size(); }
    Count total() const noexcept { return total_; }
    Count config_total(ConfigIndex j) const;
    /// r~_ij: number of positive cells in configuration j (0 if unobserved).
    std::size_t positive_cells(ConfigIndex j) const;

private:
    std::size_t r_;
    ConfigIndex q_;
    std::map<ConfigIndex, std::vector<Count>> observed_;
    Count total_ = 0;
};

/// Product of cardinalities; throws ConfigOverflow past 2^64 - 1.
ConfigIndex config_count(const std::vector<Variable>& variables, std::span<const NodeId> nodes);

/// Tallies n_ijk for `child` given `parents` (any order; sorted internally).
FamilyCounts count_family(const Dataset& data, NodeId child, std::span<const NodeId> parents);

/// p = sum_i (r_i - 1) q_i.
std::uint64_t nominal_parameter_count(const std::vector<Variable>& variables, const Dag& dag);

}  // namespace bnsl

#endif  // BNSL_DATA_HPP
