#ifndef BNSL_RNG_HPP
#define BNSL_RNG_HPP

#include <array>
#include <cstdint>
#include <limits>

namespace bnsl {

/// xoshiro256** with jump-ahead.
///
/// Independent streams come from jumping: `stream(seed, major, minor)` applies
/// `major` long jumps (2^192 steps) and `minor` jumps (2^128 steps) to the
/// state seeded from `seed`, so (seed, major, minor) names a reproducible,
/// non-overlapping stream.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed);

    static Rng stream(std::uint64_t seed, std::uint64_t major, std::uint64_t minor);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()() { return next(); }

    std::uint64_t next();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on {0, ..., bound - 1}; bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    void jump();
    void long_jump();

private:
    void apply_jump(const std::array<std::uint64_t, 4>& poly);

    std::array<std::uint64_t, 4> s_{};
};

}  // namespace bnsl

#endif  // BNSL_RNG_HPP
