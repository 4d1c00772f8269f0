#ifndef BNSL_CSV_HPP
#define BNSL_CSV_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bnsl/data.hpp"
#include "bnsl/graph.hpp"

namespace bnsl {

/// Sidecar schema: one `name:level1,level2,...` line per variable. Blank lines
/// and lines starting with '#' are ignored.
std::vector<Variable> parse_schema(std::string_view text);
std::string write_schema(const std::vector<Variable>& variables);

struct CsvDataset {
    Dataset data;
    /// Set when levels had to be inferred from the observed values.
    std::vector<std::string> warnings;
};

/// Comma-separated values with a header row of variable names. Cells are
/// trimmed; empty cells are errors (MissingCell). With a schema, levels come
/// from the declaration and unknown values throw UnknownLevel; header names
/// must match the schema (HeaderMismatch). Without a schema each column's
/// levels are its sorted distinct values and a warning is attached.
CsvDataset read_csv_dataset(std::string_view text, const std::optional<std::vector<Variable>>& schema = std::nullopt);
std::string write_csv_dataset(const Dataset& data);

/// Plain-text structure files:
///
///   # bnsl structure v1
///   nodes: A, B, C
///   A -> B
///   B -> C
struct Structure {
    std::vector<std::string> names;
    Dag dag;
};

Structure parse_structure(std::string_view text);
std::string write_structure(const Dag& dag, const std::vector<std::string>& names);

/// Splits on commas and trims surrounding whitespace from each field.
std::vector<std::string> split_fields(std::string_view line);

}  // namespace bnsl

#endif  // BNSL_CSV_HPP
