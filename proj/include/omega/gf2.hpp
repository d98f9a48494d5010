#pragma once

#include "omega/errors.hpp"

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace omega {

/// Dense matrix over GF(2), rows packed into 64-bit words.
class Gf2Matrix {
public:
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), bits_(rows * words_per_row_) {}

    static Gf2Matrix identity(std::size_t n) {
        Gf2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.set(i, i, true);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        check(r, c);
        return bits_[r * words_per_row_ + c / 64] >> (c % 64) & 1;
    }

    void set(std::size_t r, std::size_t c, bool value) {
        check(r, c);
        auto& word = bits_[r * words_per_row_ + c / 64];
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        word = value ? word | bit : word & ~bit;
    }

    bool is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

    /// Rank by Gaussian elimination on a copy, XOR-ing whole packed rows.
    std::size_t rank() const {
        std::vector<std::uint64_t> m = bits_;
        const std::size_t w = words_per_row_;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
            const std::size_t word = c / 64;
            const std::uint64_t bit = std::uint64_t{1} << (c % 64);
            std::size_t pivot = rank;
            while (pivot < rows_ && !(m[pivot * w + word] & bit))
                ++pivot;
            if (pivot == rows_)
                continue;
            if (pivot != rank)
                for (std::size_t k = 0; k < w; ++k)
                    std::swap(m[pivot * w + k], m[rank * w + k]);
            for (std::size_t r = 0; r < rows_; ++r)
                if (r != rank && (m[r * w + word] & bit))
                    for (std::size_t k = word; k < w; ++k)
                        m[r * w + k] ^= m[rank * w + k];
            ++rank;
        }
        return rank;
    }

private:
    void check(std::size_t r, std::size_t c) const {
        require(r < rows_ && c < cols_, "Gf2Matrix: index out of range");
    }

    std::size_t rows_;
    std::size_t cols_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> bits_;
};

inline std::size_t gf2_rank(const Gf2Matrix& m) { return m.rank(); }

} // namespace omega
