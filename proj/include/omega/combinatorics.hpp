#pragma once

// Exact binomials, Lucas parity and binary Krawtchouk polynomials.

#include "omega/errors.hpp"
#include "omega/exact.hpp"

#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace omega {

/// Generalized binomial coefficient t(t-1)...(t-r+1)/r! for any integer t.
inline BigInt binom(const BigInt& t, std::uint64_t r) {
    BigInt result = 1;
    // After step i the running value is C(t, i + 1): a product of i + 1
    // consecutive integers divided by (i + 1)!, so each division is exact.
    for (std::uint64_t i = 0; i < r; ++i) {
        result *= t - i;
        result /= i + 1;
    }
    return result;
}

inline BigInt binom(std::int64_t t, std::uint64_t r) { return binom(BigInt(t), r); }

/// C(a, b) mod 2 by Lucas' theorem: odd iff every set bit of b is set in a.
constexpr unsigned binom_mod2(std::uint64_t a, std::uint64_t b) noexcept {
    return (a & b) == b ? 1u : 0u;
}

/// K_j(i; m) = sum_h (-1)^h C(i, h) C(m - i, j - h). The point i may be any
/// integer; outside [0, m] the generalized binomial extends the sum.
inline BigInt krawtchouk(int j, std::int64_t i, int m) {
    require(m >= 0, "krawtchouk: dimension must be non-negative");
    require(j >= 0 && j <= m, "krawtchouk: degree must satisfy 0 <= j <= m");
    BigInt sum = 0;
    for (int h = 0; h <= j; ++h) {
        BigInt term = binom(i, static_cast<std::uint64_t>(h)) *
                      binom(static_cast<std::int64_t>(m) - i, static_cast<std::uint64_t>(j - h));
        if (h % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

inline constexpr int max_table_dimension = 64;

/// Dense table of K_j(i; m), row index i (point), column index j (degree).
class KrawtchoukTable {
public:
    explicit KrawtchoukTable(int m) : m_(m) {
        require(m >= 1 && m <= max_table_dimension,
                "krawtchouk_table: dimension must satisfy 1 <= m <= 64, got " + std::to_string(m));
        const auto side = static_cast<std::size_t>(m + 1);
        values_.reserve(side * side);
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= m; ++j)
                values_.push_back(krawtchouk(j, i, m));
    }

    int dimension() const noexcept { return m_; }

    /// K_j(i; m).
    const BigInt& at(int i, int j) const {
        require(i >= 0 && i <= m_ && j >= 0 && j <= m_, "KrawtchoukTable: index out of range");
        return values_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m_ + 1) +
                       static_cast<std::size_t>(j)];
    }

private:
    int m_;
    std::vector<BigInt> values_;
};

inline KrawtchoukTable krawtchouk_table(int m) { return KrawtchoukTable(m); }

/// Shared, lazily built table for dimension m. Each slot is written once.
inline const KrawtchoukTable& cached_krawtchouk_table(int m) {
    require(m >= 1 && m <= max_table_dimension,
            "krawtchouk_table: dimension must satisfy 1 <= m <= 64, got " + std::to_string(m));
    static std::array<std::once_flag, max_table_dimension + 1> once;
    static std::array<std::optional<KrawtchoukTable>, max_table_dimension + 1> tables;
    const auto slot = static_cast<std::size_t>(m);
    std::call_once(once[slot], [&] { tables[slot].emplace(m); });
    return *tables[slot];
}

} // namespace omega
