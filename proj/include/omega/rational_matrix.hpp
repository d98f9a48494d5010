#pragma once

// Dense exact rational matrices stored as integer numerators over one shared
// positive denominator. The representation is kept normalized (the gcd of the
// denominator and all numerators is 1), so equality is structural.

#include "omega/errors.hpp"
#include "omega/exact.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace omega {

class ExactRationalMatrix {
public:
    ExactRationalMatrix() = default;

    ExactRationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), numerators_(rows * cols), denominator_(1) {}

    ExactRationalMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> numerators,
                        BigInt denominator)
        : rows_(rows), cols_(cols), numerators_(std::move(numerators)),
          denominator_(std::move(denominator)) {
        require(numerators_.size() == rows_ * cols_, "ExactRationalMatrix: entry count mismatch");
        require(denominator_ != 0, "ExactRationalMatrix: zero denominator");
        normalize();
    }

    static ExactRationalMatrix identity(std::size_t n) {
        ExactRationalMatrix result(n, n);
        for (std::size_t i = 0; i < n; ++i)
            result.numerators_[i * n + i] = 1;
        return result;
    }

    /// Builds the matrix entrywise from a callable (row, col) -> Rational.
    template <class Fn>
    static ExactRationalMatrix from_function(std::size_t rows, std::size_t cols, Fn&& entry) {
        std::vector<Rational> values;
        values.reserve(rows * cols);
        BigInt common = 1;
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                values.push_back(Rational(entry(r, c)));
                const BigInt& d = boost::multiprecision::denominator(values.back());
                if (common % d != 0)
                    common = lcm(common, d);
            }
        std::vector<BigInt> numerators;
        numerators.reserve(values.size());
        for (const auto& v : values)
            numerators.push_back(boost::multiprecision::numerator(v) *
                                 (common / boost::multiprecision::denominator(v)));
        return ExactRationalMatrix(rows, cols, std::move(numerators), std::move(common));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const BigInt& denominator() const noexcept { return denominator_; }
    const BigInt& numerator(std::size_t r, std::size_t c) const { return numerators_[index(r, c)]; }

    Rational at(std::size_t r, std::size_t c) const {
        return Rational(numerators_[index(r, c)], denominator_);
    }

    void set(std::size_t r, std::size_t c, const Rational& value) {
        const BigInt& d = boost::multiprecision::denominator(value);
        if (denominator_ % d != 0) {
            const BigInt next = lcm(denominator_, d);
            const BigInt scale = next / denominator_;
            for (auto& x : numerators_)
                x *= scale;
            denominator_ = next;
        }
        numerators_[index(r, c)] = boost::multiprecision::numerator(value) * (denominator_ / d);
        normalize();
    }

    Rational trace() const {
        require(rows_ == cols_, "trace: matrix is not square");
        BigInt sum = 0;
        for (std::size_t i = 0; i < rows_; ++i)
            sum += numerators_[i * cols_ + i];
        return Rational(sum, denominator_);
    }

    bool is_zero() const {
        for (const auto& x : numerators_)
            if (x != 0)
                return false;
        return true;
    }

    ExactRationalMatrix scaled(const Rational& factor) const {
        std::vector<BigInt> numerators = numerators_;
        for (auto& x : numerators)
            x *= boost::multiprecision::numerator(factor);
        return ExactRationalMatrix(rows_, cols_, std::move(numerators),
                                   denominator_ * boost::multiprecision::denominator(factor));
    }

    friend ExactRationalMatrix operator+(const ExactRationalMatrix& a, const ExactRationalMatrix& b) {
        return combine(a, b, false);
    }

    friend ExactRationalMatrix operator-(const ExactRationalMatrix& a, const ExactRationalMatrix& b) {
        return combine(a, b, true);
    }

    friend ExactRationalMatrix operator*(const ExactRationalMatrix& a, const ExactRationalMatrix& b) {
        require(a.cols_ == b.rows_, "matrix product: inner dimensions differ");
        std::vector<BigInt> out(a.rows_ * b.cols_);
        if (fits_machine_product(a, b))
            multiply_small(a, b, out);
        else
            multiply_big(a, b, out);
        return ExactRationalMatrix(a.rows_, b.cols_, std::move(out), a.denominator_ * b.denominator_);
    }

    friend bool operator==(const ExactRationalMatrix&, const ExactRationalMatrix&) = default;

private:
    std::size_t index(std::size_t r, std::size_t c) const {
        require(r < rows_ && c < cols_, "ExactRationalMatrix: index out of range");
        return r * cols_ + c;
    }

    void normalize() {
        if (denominator_ < 0) {
            denominator_ = -denominator_;
            for (auto& x : numerators_)
                x = -x;
        }
        BigInt g = denominator_;
        for (const auto& x : numerators_) {
            if (g == 1)
                return;
            if (x != 0)
                g = gcd(g, x);
        }
        if (g == 1)
            return;
        denominator_ /= g;
        for (auto& x : numerators_)
            x /= g;
    }

    static ExactRationalMatrix combine(const ExactRationalMatrix& a, const ExactRationalMatrix& b,
                                       bool subtract) {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum: shapes differ");
        const BigInt common = lcm(a.denominator_, b.denominator_);
        const BigInt sa = common / a.denominator_;
        const BigInt sb = common / b.denominator_;
        std::vector<BigInt> out(a.numerators_.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = subtract ? a.numerators_[i] * sa - b.numerators_[i] * sb
                              : a.numerators_[i] * sa + b.numerators_[i] * sb;
        return ExactRationalMatrix(a.rows_, a.cols_, std::move(out), common);
    }

    static BigInt max_abs(const ExactRationalMatrix& m) {
        BigInt best = 0;
        for (const auto& x : m.numerators_)
            if (abs(x) > best)
                best = abs(x);
        return best;
    }

    // True when every partial dot product is guaranteed to fit in int64.
    static bool fits_machine_product(const ExactRationalMatrix& a, const ExactRationalMatrix& b) {
        const BigInt bound = max_abs(a) * max_abs(b) * BigInt(a.cols_);
        return bound < BigInt(std::numeric_limits<std::int64_t>::max());
    }

    static void multiply_small(const ExactRationalMatrix& a, const ExactRationalMatrix& b,
                               std::vector<BigInt>& out) {
        const auto to_machine = [](const std::vector<BigInt>& src) {
            std::vector<std::int64_t> dst(src.size());
            for (std::size_t i = 0; i < src.size(); ++i)
                dst[i] = src[i].convert_to<std::int64_t>();
            return dst;
        };
        const auto left = to_machine(a.numerators_);
        const auto right = to_machine(b.numerators_);
        std::vector<std::int64_t> acc(b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto x = left[r * a.cols_ + k];
                if (x == 0)
                    continue;
                const auto* row = &right[k * b.cols_];
                for (std::size_t c = 0; c < b.cols_; ++c)
                    acc[c] += x * row[c];
            }
            for (std::size_t c = 0; c < b.cols_; ++c)
                out[r * b.cols_ + c] = acc[c];
        }
    }

    static void multiply_big(const ExactRationalMatrix& a, const ExactRationalMatrix& b,
                             std::vector<BigInt>& out) {
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const BigInt& x = a.numerators_[r * a.cols_ + k];
                if (x == 0)
                    continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    out[r * b.cols_ + c] += x * b.numerators_[k * b.cols_ + c];
            }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> numerators_;
    BigInt denominator_ = 1;
};

/// Rank over the rationals by fraction-free (Bareiss) elimination on the
/// numerators; the shared denominator does not affect rank.
inline std::size_t exact_rank(const ExactRationalMatrix& matrix) {
    const std::size_t rows = matrix.rows();
    const std::size_t cols = matrix.cols();
    std::vector<BigInt> m(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m[r * cols + c] = matrix.numerator(r, c);
    auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return m[r * cols + c]; };

    BigInt previous = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(at(pivot, k), at(rank, k));
        const BigInt p = at(rank, c);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const BigInt lead = at(r, c);
            for (std::size_t k = c + 1; k < cols; ++k)
                at(r, k) = (p * at(r, k) - lead * at(rank, k)) / previous;
            at(r, c) = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

} // namespace omega
