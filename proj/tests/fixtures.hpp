#ifndef BNSL_TESTS_FIXTURES_HPP
#define BNSL_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "bnsl/data.hpp"
#include "bnsl/rng.hpp"

namespace fixtures {

using bnsl::Dataset;
using bnsl::Level;
using bnsl::Variable;

inline Variable binary(const std::string& name) { return Variable(name, {"0", "1"}); }

// Node order X, Z, W, Y so that X's parents {Z, W, Y} are in ascending order
// and configuration (z, w, y) has index 4z + 2w + y.
inline constexpr bnsl::NodeId kX = 0, kZ = 1, kW = 2, kY = 3;

// Twelve rows, three per (Z, W) cell, with Y = Z and W. `x_ones[c]` is the
// number of X = 1 rows in cell c = 2z + w.
inline Dataset xzwy(const int (&x_ones)[4]) {
    std::vector<std::vector<Level>> rows;
    for (Level z = 0; z < 2; ++z)
        for (Level w = 0; w < 2; ++w)
            for (int k = 0; k < 3; ++k) {
                const Level x = k < x_ones[2 * z + w] ? 1 : 0;
                rows.push_back({x, z, w, static_cast<Level>(z & w)});
            }
    return Dataset({binary("X"), binary("Z"), binary("W"), binary("Y")}, rows);
}

/// X keeps some dependence on (Z, W) but no cell is pure.
inline Dataset noisy_xor() { return xzwy({1, 2, 2, 1}); }
/// X = Z xor W exactly.
inline Dataset exact_xor() { return xzwy({0, 3, 3, 0}); }

/// Variables X (node 0) and Y (node 1): (X=0, Y=1) twice and (X=1, Y=1) five times.
inline Dataset constant_y() {
    std::vector<std::vector<Level>> rows;
    for (int i = 0; i < 2; ++i) rows.push_back({0, 1});
    for (int i = 0; i < 5; ++i) rows.push_back({1, 1});
    return Dataset({binary("X"), binary("Y")}, rows);
}

/// Independent uniform levels.
inline Dataset random_dataset(std::size_t n_vars, std::size_t levels, std::size_t rows, std::uint64_t seed) {
    bnsl::Rng rng(seed);
    std::vector<Variable> vars;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < levels; ++k) labels.push_back("l" + std::to_string(k));
    for (std::size_t v = 0; v < n_vars; ++v) vars.emplace_back("V" + std::to_string(v), labels);
    std::vector<std::vector<Level>> data(rows, std::vector<Level>(n_vars));
    for (auto& row : data)
        for (auto& cell : row) cell = static_cast<Level>(rng.below(levels));
    return Dataset(std::move(vars), data);
}

// 50-digit Gamma-product reference values (tests/oracles/fixture_scores.py).
namespace oracle {
inline constexpr double kNoisyBdeuZW = 3.90625e-7;
inline constexpr double kNoisyBdeuZWY = 3.72108862978e-8;
inline constexpr double kNoisyBdsZW = 3.90625e-7;
inline constexpr double kNoisyBdsZWY = 3.90625e-7;
inline constexpr double kNoisyEntropyEmpirical = 2.54605667318;
inline constexpr double kNoisyEntropyBdeuZW = 2.5801326067;
inline constexpr double kNoisyEntropyBdeuZWY = 2.56414191152;
inline constexpr double kNoisyRatioTiny = 15.999992;   // alpha = 1e-6
inline constexpr double kNoisyRatioHuge = 1.00000016;  // alpha = 1e8

inline constexpr double kExactBdeuZW = 0.032625390625;
inline constexpr double kExactBdeuZWY = 0.0441291714892;
inline constexpr double kExactBdsZWY = 0.032625390625;
inline constexpr double kExactEntropyBdeuZW = 0.652094517977;
inline constexpr double kExactEntropyBdeuZWY = 0.392156453119;
inline constexpr double kExactBdeuZWTinyAlpha = 0.0624999995313;  // alpha = 1e-8
inline constexpr double kExactRatioTiny = 0.999999625;
inline constexpr double kExactRatioHuge = 0.99999952;

inline constexpr double kConstYLogBdsYX = -6.99055647605456;
inline constexpr double kConstYLogBdsXY = -7.41495878518248;
inline constexpr double kConstYLogBdsEmpty = -6.99055647605456;
}  // namespace oracle

}  // namespace fixtures

#endif  // BNSL_TESTS_FIXTURES_HPP
