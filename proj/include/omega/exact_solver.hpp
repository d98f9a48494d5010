#pragma once

// Exact maximum independent set of Omega_n for n <= 8 (at most 256 vertices),
// as a maximum clique in the complement graph. Branch and bound with a greedy
// colouring bound over packed bitsets; candidates are coloured in index order
// and branched on from the highest colour down, so runs are deterministic.

#include "omega/errors.hpp"
#include "omega/hypercube.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace omega {

inline constexpr unsigned exact_solver_guard = 8;

class Bitset {
public:
    explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1; }

    bool none() const {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Lowest set index, or npos.
    std::size_t first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k])
                return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return npos;
    }

    Bitset& operator&=(const Bitset& other) {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= other.words_[k];
        return *this;
    }

    void subtract(const Bitset& other) {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= ~other.words_[k];
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::uint64_t> words_;
};

/// Branch-and-bound state: the growing set and the incumbent.
struct SearchState {
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;
    std::uint64_t nodes = 0;
};

/// Maximum clique of the graph given by `adjacency`; index order breaks ties.
class CliqueSolver {
public:
    explicit CliqueSolver(std::vector<Bitset> adjacency) : adjacency_(std::move(adjacency)) {}

    SearchState solve() {
        SearchState state;
        Bitset candidates(adjacency_.size());
        for (std::size_t v = 0; v < adjacency_.size(); ++v)
            candidates.set(v);
        expand(state, candidates);
        return state;
    }

private:
    void expand(SearchState& state, Bitset candidates) {
        ++state.nodes;
        std::vector<std::size_t> order;
        std::vector<std::size_t> colour;
        colour_candidates(candidates, state, order, colour);
        for (std::size_t pos = order.size(); pos-- > 0;) {
            if (state.current.size() + colour[pos] <= state.best.size())
                return;
            const auto v = order[pos];
            state.current.push_back(v);
            Bitset next = candidates;
            next &= adjacency_[v];
            if (next.none()) {
                if (state.current.size() > state.best.size())
                    state.best = state.current;
            } else {
                expand(state, next);
            }
            state.current.pop_back();
            candidates.reset(v);
        }
    }

    // Greedy sequential colouring; vertices whose colour cannot lift the
    // current set past the incumbent are left out of `order`.
    void colour_candidates(const Bitset& candidates, const SearchState& state,
                           std::vector<std::size_t>& order, std::vector<std::size_t>& colour) const {
        const std::size_t needed = state.best.size() + 1 > state.current.size()
                                       ? state.best.size() + 1 - state.current.size()
                                       : 0;
        Bitset uncoloured = candidates;
        std::size_t k = 1;
        while (!uncoloured.none()) {
            Bitset open = uncoloured;
            while (!open.none()) {
                const auto v = open.first();
                open.reset(v);
                uncoloured.reset(v);
                open.subtract(adjacency_[v]);
                if (k >= needed) {
                    order.push_back(v);
                    colour.push_back(k);
                }
            }
            ++k;
        }
    }

    std::vector<Bitset> adjacency_;
};

struct MisResult {
    std::size_t size = 0;
    VertexSet witness;
    std::uint64_t nodes = 0;
};

namespace detail {

inline MisResult max_independent_among(unsigned n, const std::vector<std::uint64_t>& vertices) {
    const std::size_t count = vertices.size();
    std::vector<Bitset> complement(count, Bitset(count));
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b)
            if (a != b && !is_edge(Vertex(vertices[a], n), Vertex(vertices[b], n)))
                complement[a].set(b);
    auto state = CliqueSolver(std::move(complement)).solve();
    std::vector<std::uint64_t> masks;
    for (auto index : state.best)
        masks.push_back(vertices[index]);
    return MisResult{state.best.size(), VertexSet(n, std::move(masks)), state.nodes};
}

} // namespace detail

/// alpha(Omega_n) with a witness. Odd n is edgeless and returns every vertex.
inline MisResult max_independent_set(unsigned n) {
    require(n >= 1 && n <= exact_solver_guard,
            "max_independent_set: exact mode needs 1 <= n <= 8, got " + std::to_string(n));
    std::vector<std::uint64_t> vertices(std::size_t{1} << n);
    for (std::size_t v = 0; v < vertices.size(); ++v)
        vertices[v] = v;
    if (n % 2 != 0)
        return MisResult{vertices.size(), VertexSet(n, vertices), 0};
    return detail::max_independent_among(n, vertices);
}

/// Independence number restricted to even-weight vertices, n = 0 (mod 4).
/// Edges only join vertices of equal weight parity and flipping one
/// coordinate swaps the classes, so alpha(Omega_n) is twice this value.
inline MisResult max_independent_set_parity_class(unsigned n) {
    require(n >= 4 && n <= exact_solver_guard && n % 4 == 0,
            "max_independent_set_parity_class: n must be 4 or 8, got " + std::to_string(n));
    std::vector<std::uint64_t> vertices;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
        if (std::popcount(v) % 2 == 0)
            vertices.push_back(v);
    return detail::max_independent_among(n, vertices);
}

} // namespace omega
