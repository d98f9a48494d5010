#pragma once

// Exact Bose-Mesner algebra of Q_m for small m: distance matrices A_j,
// eigenspace projections E_i built entrywise from Krawtchouk values, and the
// identities tying them together. Rows and columns are indexed by mask.

#include "omega/combinatorics.hpp"
#include "omega/errors.hpp"
#include "omega/exact.hpp"
#include "omega/rational_matrix.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace omega {

inline constexpr int distance_matrix_guard = 13;
inline constexpr int projection_matrix_guard = 11;
inline constexpr int spectral_check_guard = 9;

inline ExactRationalMatrix distance_matrix(int j, int m) {
    require(m >= 1 && m <= distance_matrix_guard,
            "distance_matrix: dimension must satisfy 1 <= m <= 13, got " + std::to_string(m));
    require(j >= 0 && j <= m, "distance_matrix: distance must satisfy 0 <= j <= m");
    const std::size_t side = std::size_t{1} << m;
    std::vector<BigInt> entries(side * side);
    for (std::size_t x = 0; x < side; ++x)
        for (std::size_t y = 0; y < side; ++y)
            if (std::popcount(x ^ y) == j)
                entries[x * side + y] = 1;
    return ExactRationalMatrix(side, side, std::move(entries), 1);
}

/// (E_i)_xy for x, y at distance j: 2^-m K_i(j; m).
inline Rational projection_entry(int i, int j, int m) {
    require(m >= 1 && m <= max_table_dimension, "projection_entry: dimension must satisfy 1 <= m <= 64");
    require(i >= 0 && i <= m && j >= 0 && j <= m, "projection_entry: indices must lie in [0, m]");
    return Rational(cached_krawtchouk_table(m).at(j, i), pow2(static_cast<unsigned>(m)));
}

inline ExactRationalMatrix projection_matrix(int i, int m) {
    require(m >= 1 && m <= projection_matrix_guard,
            "projection_matrix: dimension must satisfy 1 <= m <= 11, got " + std::to_string(m));
    require(i >= 0 && i <= m, "projection_matrix: index must satisfy 0 <= i <= m");
    const auto& table = cached_krawtchouk_table(m);
    const std::size_t side = std::size_t{1} << m;
    std::vector<BigInt> entries(side * side);
    for (std::size_t x = 0; x < side; ++x)
        for (std::size_t y = 0; y < side; ++y)
            entries[x * side + y] = table.at(std::popcount(x ^ y), i);
    return ExactRationalMatrix(side, side, std::move(entries), pow2(static_cast<unsigned>(m)));
}

struct IdentityCheck {
    std::string identity;      // e.g. "A_j = sum_i K_j(i) E_i"
    std::vector<int> indices;  // which j, or (i, l), or i
    bool passed = false;
};

struct SpectralReport {
    int m = 0;
    std::vector<IdentityCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }

    std::vector<IdentityCheck> failures() const {
        std::vector<IdentityCheck> out;
        for (const auto& c : checks)
            if (!c.passed)
                out.push_back(c);
        return out;
    }
};

/// Checks the algebra identities on caller-supplied A_0..A_m and E_0..E_m.
/// Split out from spectral_check so that perturbed inputs can be examined.
inline SpectralReport check_spectral_identities(int m, std::span<const ExactRationalMatrix> distance,
                                                std::span<const ExactRationalMatrix> projection) {
    require(distance.size() == static_cast<std::size_t>(m + 1) &&
                projection.size() == static_cast<std::size_t>(m + 1),
            "check_spectral_identities: expected m + 1 matrices of each kind");
    const auto& table = cached_krawtchouk_table(m);
    const std::size_t side = std::size_t{1} << m;
    SpectralReport report;
    report.m = m;

    for (int j = 0; j <= m; ++j) {
        ExactRationalMatrix sum(side, side);
        for (int i = 0; i <= m; ++i)
            sum = sum + projection[i].scaled(Rational(table.at(i, j)));
        report.checks.push_back({"A_j = sum_i K_j(i) E_i", {j}, sum == distance[j]});
    }

    const ExactRationalMatrix zero(side, side);
    for (int i = 0; i <= m; ++i)
        for (int l = 0; l <= m; ++l) {
            const auto product = projection[i] * projection[l];
            const bool ok = i == l ? product == projection[i] : product == zero;
            report.checks.push_back({"E_i E_l = delta_il E_i", {i, l}, ok});
        }

    ExactRationalMatrix total(side, side);
    for (int i = 0; i <= m; ++i)
        total = total + projection[i];
    report.checks.push_back({"sum_i E_i = I", {}, total == ExactRationalMatrix::identity(side)});

    for (int i = 0; i <= m; ++i)
        report.checks.push_back({"trace E_i = C(m, i)", {i},
                                 projection[i].trace() == Rational(binom(m, static_cast<std::uint64_t>(i)))});
    return report;
}

inline SpectralReport spectral_check(int m) {
    require(m >= 1 && m <= spectral_check_guard,
            "spectral_check: dimension must satisfy 1 <= m <= 9, got " + std::to_string(m));
    std::vector<ExactRationalMatrix> distance;
    std::vector<ExactRationalMatrix> projection;
    for (int j = 0; j <= m; ++j) {
        distance.push_back(distance_matrix(j, m));
        projection.push_back(projection_matrix(j, m));
    }
    return check_spectral_identities(m, distance, projection);
}

struct RatioBound {
    Rational value;
    BigInt valency;
    BigInt min_eigenvalue;
};

/// Hoffman ratio bound 2^n (-lambda_min) / (k - lambda_min) for the
/// distance-j graph on Q_n, where k = C(n, j) and lambda_min = min_i K_j(i; n).
inline RatioBound ratio_bound(int n, int j) {
    require(n >= 1 && n <= max_table_dimension, "ratio_bound: dimension must satisfy 1 <= n <= 64");
    require(j >= 0 && j <= n, "ratio_bound: distance must satisfy 0 <= j <= n");
    const auto& table = cached_krawtchouk_table(n);
    BigInt lambda_min = table.at(0, j);
    for (int i = 1; i <= n; ++i)
        if (table.at(i, j) < lambda_min)
            lambda_min = table.at(i, j);
    if (lambda_min >= 0)
        fail(error_kind::void_bound, "ratio_bound: least eigenvalue " + lambda_min.str() +
                                         " is non-negative, the bound is void");
    const BigInt valency = binom(n, static_cast<std::uint64_t>(j));
    return RatioBound{Rational(pow2(static_cast<unsigned>(n)) * -lambda_min, valency - lambda_min),
                      valency, lambda_min};
}

} // namespace omega
