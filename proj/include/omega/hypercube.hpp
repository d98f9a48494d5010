#pragma once

// Bitmask vertices of Q_n and the orthogonality graph on them.
//
// Bit b of a mask is coordinate b; a set bit means the coordinate is -1.
// The "last coordinate" is bit n - 1. Weight is the number of -1 entries.

#include "omega/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace omega {

inline constexpr unsigned max_dimension = 64;

constexpr std::uint64_t low_mask(unsigned dim) noexcept {
    return dim >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1;
}

class Vertex {
public:
    Vertex(std::uint64_t mask, unsigned dim) : mask_(mask), dim_(dim) {
        require(dim >= 1 && dim <= max_dimension,
                "Vertex: dimension must satisfy 1 <= n <= 64, got " + std::to_string(dim));
        require((mask & ~low_mask(dim)) == 0, "Vertex: mask has bits at or above the dimension");
    }

    std::uint64_t mask() const noexcept { return mask_; }
    unsigned dim() const noexcept { return dim_; }
    unsigned weight() const noexcept { return static_cast<unsigned>(std::popcount(mask_)); }

    /// The vector -x.
    Vertex complement() const { return Vertex(~mask_ & low_mask(dim_), dim_); }

    friend bool operator==(const Vertex&, const Vertex&) = default;

private:
    std::uint64_t mask_;
    unsigned dim_;
};

inline unsigned hamming(const Vertex& x, const Vertex& y) {
    require(x.dim() == y.dim(), "hamming: dimension mismatch");
    return static_cast<unsigned>(std::popcount(x.mask() ^ y.mask()));
}

/// Orthogonality adjacency: distance exactly n/2. Odd n has no edges.
inline bool is_edge(const Vertex& x, const Vertex& y) {
    require(x.dim() == y.dim(), "is_edge: dimension mismatch");
    if (x.dim() % 2 != 0)
        return false;
    return hamming(x, y) == x.dim() / 2;
}

/// Duplicate-free vertex collection of one dimension, kept in ascending mask order.
class VertexSet {
public:
    explicit VertexSet(unsigned dim) : dim_(dim) {
        require(dim >= 1 && dim <= max_dimension,
                "VertexSet: dimension must satisfy 1 <= n <= 64, got " + std::to_string(dim));
    }

    VertexSet(unsigned dim, std::vector<std::uint64_t> masks) : VertexSet(dim) {
        const auto high = ~low_mask(dim);
        for (auto m : masks)
            require((m & high) == 0, "VertexSet: mask has bits at or above the dimension");
        std::sort(masks.begin(), masks.end());
        require(std::adjacent_find(masks.begin(), masks.end()) == masks.end(),
                "VertexSet: duplicate vertex");
        masks_ = std::move(masks);
    }

    unsigned dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return masks_.size(); }
    bool empty() const noexcept { return masks_.empty(); }
    std::span<const std::uint64_t> masks() const noexcept { return masks_; }
    Vertex operator[](std::size_t index) const { return Vertex(masks_.at(index), dim_); }

    bool contains(std::uint64_t mask) const {
        return std::binary_search(masks_.begin(), masks_.end(), mask);
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    unsigned dim_;
    std::vector<std::uint64_t> masks_;
};

inline constexpr std::size_t exhaustive_guard = 100000;

struct Violation {
    Vertex first;
    Vertex second;
};

struct IndependenceVerdict {
    bool independent = true;
    std::optional<Violation> violation;
    std::uint64_t pairs_checked = 0;
};

/// Exhaustive pairwise scan. The reported violation is the lexicographically
/// first (by position in ascending-mask order).
inline IndependenceVerdict verify_independent(const VertexSet& set) {
    require(set.size() <= exhaustive_guard,
            "verify_independent: set has " + std::to_string(set.size()) +
                " vertices, exhaustive mode is limited to 100000; use sampled verification");
    IndependenceVerdict verdict;
    if (set.dim() % 2 != 0)
        return verdict;
    const unsigned half = set.dim() / 2;
    const auto masks = set.masks();
    for (std::size_t a = 0; a < masks.size(); ++a) {
        const auto x = masks[a];
        for (std::size_t b = a + 1; b < masks.size(); ++b) {
            ++verdict.pairs_checked;
            if (static_cast<unsigned>(std::popcount(x ^ masks[b])) == half) {
                verdict.independent = false;
                verdict.violation = Violation{set[a], set[b]};
                return verdict;
            }
        }
    }
    return verdict;
}

/// Draws an unordered pair of distinct indices below `count` (count >= 2).
template <class Engine>
std::pair<std::uint64_t, std::uint64_t> random_pair(Engine& engine, std::uint64_t count) {
    std::uniform_int_distribution<std::uint64_t> first(0, count - 1);
    std::uniform_int_distribution<std::uint64_t> second(0, count - 2);
    auto a = first(engine);
    auto b = second(engine);
    if (b >= a)
        ++b;
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

/// Seeded Monte Carlo pair sampling; reproducible for a given seed.
inline IndependenceVerdict verify_independent_sampled(const VertexSet& set, std::uint64_t trials,
                                                      std::uint64_t seed) {
    require(trials >= 1, "verify_independent_sampled: trials must be at least 1");
    IndependenceVerdict verdict;
    if (set.size() < 2 || set.dim() % 2 != 0)
        return verdict;
    const unsigned half = set.dim() / 2;
    const auto masks = set.masks();
    std::mt19937_64 engine(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto [a, b] = random_pair(engine, masks.size());
        ++verdict.pairs_checked;
        if (static_cast<unsigned>(std::popcount(masks[a] ^ masks[b])) == half) {
            verdict.independent = false;
            verdict.violation = Violation{set[a], set[b]};
            return verdict;
        }
    }
    return verdict;
}

/// The four truncated families: members of C classified by weight parity and
/// the sign of the last coordinate, with that coordinate removed.
struct FamilySplit {
    VertexSet even_plus;
    VertexSet even_minus;
    VertexSet odd_plus;
    VertexSet odd_minus;

    std::size_t total_size() const noexcept {
        return even_plus.size() + even_minus.size() + odd_plus.size() + odd_minus.size();
    }
};

inline FamilySplit split_truncate(const VertexSet& set) {
    const unsigned n = set.dim();
    require(n >= 2, "split_truncate: dimension must be at least 2");
    const std::uint64_t last = std::uint64_t{1} << (n - 1);
    const std::uint64_t keep = low_mask(n - 1);
    std::vector<std::uint64_t> buckets[4];
    for (auto mask : set.masks()) {
        const bool odd = std::popcount(mask) % 2 != 0;
        const bool minus = (mask & last) != 0;
        buckets[(odd ? 2 : 0) + (minus ? 1 : 0)].push_back(mask & keep);
    }
    return FamilySplit{VertexSet(n - 1, std::move(buckets[0])), VertexSet(n - 1, std::move(buckets[1])),
                       VertexSet(n - 1, std::move(buckets[2])), VertexSet(n - 1, std::move(buckets[3]))};
}

/// Sorted list of distinct pairwise distances.
inline std::vector<unsigned> distance_spectrum(const VertexSet& set) {
    require(set.size() <= exhaustive_guard,
            "distance_spectrum: set exceeds the exhaustive scan limit of 100000 vertices");
    std::uint64_t seen = 0;  // bit d: distance d occurs; d <= 64 needs 65 bits
    bool full = false;
    const auto masks = set.masks();
    for (std::size_t a = 0; a < masks.size(); ++a)
        for (std::size_t b = a + 1; b < masks.size(); ++b) {
            const auto d = static_cast<unsigned>(std::popcount(masks[a] ^ masks[b]));
            if (d == 64)
                full = true;
            else
                seen |= std::uint64_t{1} << d;
        }
    std::vector<unsigned> result;
    for (unsigned d = 0; d < 64; ++d)
        if (seen >> d & 1)
            result.push_back(d);
    if (full)
        result.push_back(64);
    return result;
}

} // namespace omega
