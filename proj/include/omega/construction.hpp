#pragma once

// The double-ball independent set of size a_n for n = 0 (mod 4): all x whose
// first n - 1 coordinates lie within distance n/4 - 1 of the all-(+1) or the
// all-(-1) vector, with the last coordinate free.

#include "omega/combinatorics.hpp"
#include "omega/errors.hpp"
#include "omega/exact.hpp"
#include "omega/hypercube.hpp"

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace omega {

/// a_n = 4 sum_{i=0}^{n/4-1} C(n-1, i).
inline BigInt a_n(int n) {
    require(n >= 4 && n % 4 == 0, "a_n: n must be a positive multiple of 4, got " + std::to_string(n));
    BigInt sum = 0;
    for (int i = 0; i <= n / 4 - 1; ++i)
        sum += binom(n - 1, static_cast<std::uint64_t>(i));
    return 4 * sum;
}

inline bool is_power_of_two(std::uint64_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

inline constexpr std::uint64_t materialization_guard = std::uint64_t{1} << 26;

class ExtremalSetSpec {
public:
    explicit ExtremalSetSpec(unsigned n) : n_(n) {
        require(n >= 4 && n % 4 == 0 && n <= max_dimension,
                "extremal set: n must be a multiple of 4 with 4 <= n <= 64, got " + std::to_string(n));
        radius_ = n / 4 - 1;
        ball_layers_.reserve(radius_ + 1);
        std::uint64_t total = 0;
        for (unsigned w = 0; w <= radius_; ++w) {
            total += binom(n - 1, w).convert_to<std::uint64_t>();
            ball_layers_.push_back(total);
        }
    }

    unsigned dim() const noexcept { return n_; }
    unsigned radius() const noexcept { return radius_; }
    std::uint64_t truncated_mask() const noexcept { return low_mask(n_ - 1); }
    std::uint64_t ball_size() const noexcept { return ball_layers_.back(); }

    /// 4 * |ball|; equals a_n.
    BigInt size() const { return BigInt(ball_size()) * 4; }

    bool contains(std::uint64_t mask) const noexcept {
        const auto w = static_cast<unsigned>(std::popcount(mask & truncated_mask()));
        return (mask & ~low_mask(n_)) == 0 && (w <= radius_ || (n_ - 1) - w <= radius_);
    }

    /// Uniform member: weight layer by size, then a uniform subset of that
    /// weight, then a uniform choice of center and last coordinate.
    template <class Engine>
    std::uint64_t sample(Engine& engine) const {
        std::uniform_int_distribution<std::uint64_t> pick(0, ball_size() - 1);
        const auto r = pick(engine);
        unsigned w = 0;
        while (r >= ball_layers_[w])
            ++w;
        std::uint64_t subset = 0;
        // Floyd's algorithm for a w-subset of {0, ..., n - 2}.
        const unsigned universe = n_ - 1;
        for (unsigned j = universe - w; j < universe; ++j) {
            std::uniform_int_distribution<unsigned> t(0, j);
            const unsigned bit = t(engine);
            subset |= (subset >> bit & 1) ? std::uint64_t{1} << j : std::uint64_t{1} << bit;
        }
        std::uniform_int_distribution<unsigned> flips(0, 3);
        const unsigned f = flips(engine);
        if (f & 1)
            subset = ~subset & truncated_mask();
        if (f & 2)
            subset |= std::uint64_t{1} << (n_ - 1);
        return subset;
    }

private:
    unsigned n_;
    unsigned radius_ = 0;
    std::vector<std::uint64_t> ball_layers_;  // cumulative layer sizes
};

/// Materializes the extremal set in ascending mask order.
inline VertexSet build_extremal_set(const ExtremalSetSpec& spec) {
    require(spec.size() <= materialization_guard,
            "build_extremal_set: " + spec.size().str() + " vertices exceed the materialization limit");
    const unsigned n = spec.dim();
    const std::uint64_t keep = spec.truncated_mask();
    const std::uint64_t last = std::uint64_t{1} << (n - 1);
    std::vector<std::uint64_t> masks;
    masks.reserve(spec.size().convert_to<std::size_t>());
    for (unsigned w = 0; w <= spec.radius(); ++w) {
        if (w == 0) {
            for (auto c : {std::uint64_t{0}, keep})
                masks.insert(masks.end(), {c, c | last});
            continue;
        }
        // Gosper's hack over all w-subsets of the first n - 1 coordinates.
        std::uint64_t c = (std::uint64_t{1} << w) - 1;
        while ((c & ~keep) == 0) {
            const std::uint64_t opposite = ~c & keep;
            masks.insert(masks.end(), {c, c | last, opposite, opposite | last});
            const std::uint64_t low = c & (~c + 1);
            const std::uint64_t ripple = c + low;
            if (ripple == 0)
                break;
            c = (((ripple ^ c) >> 2) / low) | ripple;
        }
    }
    return VertexSet(n, std::move(masks));
}

inline VertexSet build_extremal_set(int n) {
    require(n >= 4, "build_extremal_set: n must be a multiple of 4 with 4 <= n <= 64");
    return build_extremal_set(ExtremalSetSpec(static_cast<unsigned>(n)));
}

/// Sampled independence check over the implicit set, without materializing it.
inline IndependenceVerdict verify_extremal_sampled(const ExtremalSetSpec& spec, std::uint64_t trials,
                                                   std::uint64_t seed) {
    require(trials >= 1, "verify_extremal_sampled: trials must be at least 1");
    IndependenceVerdict verdict;
    const unsigned half = spec.dim() / 2;
    std::mt19937_64 engine(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto x = spec.sample(engine);
        auto y = spec.sample(engine);
        while (y == x)
            y = spec.sample(engine);
        ++verdict.pairs_checked;
        if (static_cast<unsigned>(std::popcount(x ^ y)) == half) {
            verdict.independent = false;
            verdict.violation = Violation{Vertex(std::min(x, y), spec.dim()), Vertex(std::max(x, y), spec.dim())};
            return verdict;
        }
    }
    return verdict;
}

/// ceil(2^n / a_n) for n = 2^k, k >= 2, where a_n is the independence number.
inline BigInt chromatic_lower_bound(int n) {
    require(n >= 4 && n <= static_cast<int>(max_dimension) && is_power_of_two(static_cast<std::uint64_t>(n)),
            "chromatic_lower_bound: n must be a power of two with 4 <= n <= 64, got " + std::to_string(n));
    const BigInt vertices = pow2(static_cast<unsigned>(n));
    const BigInt alpha = a_n(n);
    return (vertices + alpha - 1) / alpha;
}

} // namespace omega
