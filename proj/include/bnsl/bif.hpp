#ifndef BNSL_BIF_HPP
#define BNSL_BIF_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bnsl/bn.hpp"

namespace bnsl {

// Supported BIF subset:
//
//   network NAME { property ...; }
//   variable NAME { type discrete [ N ] { l1, l2, ... }; property ...; }
//   probability ( CHILD | P1, P2, ... ) {
//     ( p1level, p2level, ... ) x1, x2, ...;    -- one entry per parent configuration
//     table x1, x2, ...;                        -- or one flat table
//     property ...;
//   }
//
// `//` and `/* */` comments are skipped. A flat table lists the CPT rows one
// after another, configurations in row-major order over the parents as listed
// in the block header (first-listed parent most significant, last-listed
// varying fastest); within a row the child levels are in declaration order.

struct BifVariable {
    std::string name;
    std::vector<std::string> levels;
    std::vector<std::string> properties;
    std::size_t line = 0;
};

struct BifEntry {
    std::vector<std::string> parent_levels;
    std::vector<double> probabilities;
    std::size_t line = 0;
};

struct BifProbability {
    std::string child;
    std::vector<std::string> parents;
    std::vector<BifEntry> entries;
    std::optional<std::vector<double>> table;
    std::vector<std::string> properties;
    std::size_t line = 0;
};

struct BifDocument {
    std::string network_name;
    std::vector<std::string> network_properties;
    std::vector<BifVariable> variables;
    std::vector<BifProbability> probabilities;
};

/// Syntax only. Throws SyntaxError(line, column, expected).
BifDocument parse_bif_document(std::string_view text);

/// Semantic checks and CPT assembly. Throws SemanticError for undeclared
/// variables or levels, duplicate or missing blocks, incomplete tables, rows
/// not summing to 1 within 1e-6 and cyclic parent structures. Accepted rows
/// are renormalized exactly.
Bn to_bn(const BifDocument& doc);

Bn parse_bif(std::string_view text);

/// Deterministic BIF text; parse_bif(emit_bif(bn)) reproduces `bn`.
std::string emit_bif(const Bn& bn);

}  // namespace bnsl

#endif  // BNSL_BIF_HPP
