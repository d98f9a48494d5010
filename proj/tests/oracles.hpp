#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include "omega/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using omega::BigInt;
using omega::Rational;

/// C(a, b) for 0 <= b <= a by Pascal's rule.
inline std::vector<std::vector<BigInt>> pascal(int rows) {
    std::vector<std::vector<BigInt>> t(rows + 1);
    for (int a = 0; a <= rows; ++a) {
        t[a].assign(a + 1, 1);
        for (int b = 1; b < a; ++b)
            t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
    }
    return t;
}

/// K_j(i; m) as a character sum over weight-j words y against a weight-i word x:
/// sum_{|y| = j} (-1)^{|x AND y|}.
inline BigInt krawtchouk_by_characters(int j, int i, int m) {
    const std::uint32_t x = (1u << i) - 1;
    BigInt sum = 0;
    for (std::uint32_t y = 0; y < (1u << m); ++y)
        if (std::popcount(y) == j)
            sum += std::popcount(x & y) % 2 == 0 ? 1 : -1;
    return sum;
}

/// Dense polynomial in power basis, coefficient d multiplies x^d.
struct Poly {
    std::vector<Rational> c;

    static Poly constant(const Rational& v) { return Poly{{v}}; }

    int degree() const {
        for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d)
            if (c[d] != 0)
                return d;
        return -1;
    }

    Rational coeff(int d) const { return d < static_cast<int>(c.size()) ? c[d] : Rational(0); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out{std::vector<Rational>(a.c.size() + b.c.size() - 1)};
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                out.c[i + j] += a.c[i] * b.c[j];
        return out;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly out{std::vector<Rational>(std::max(a.c.size(), b.c.size()))};
        for (std::size_t i = 0; i < out.c.size(); ++i)
            out.c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return out;
    }

    Poly scaled(const Rational& s) const {
        Poly out = *this;
        for (auto& v : out.c)
            v *= s;
        return out;
    }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }
};

/// Polynomial in x for C(a x + b, r) = prod_{t<r} (a x + b - t) / r!.
inline Poly binomial_poly(const Rational& a, const Rational& b, int r) {
    Poly p = Poly::constant(1);
    BigInt factorial = 1;
    for (int t = 0; t < r; ++t) {
        p = p * Poly{{b - t, a}};
        factorial *= t + 1;
    }
    return p.scaled(Rational(1, factorial));
}

/// K_i(x; m) in the power basis of x.
inline Poly krawtchouk_poly(int i, int m) {
    Poly sum = Poly::constant(0);
    for (int h = 0; h <= i; ++h) {
        Poly term = binomial_poly(1, 0, h) * binomial_poly(-1, m, i - h);
        sum = sum + term.scaled(h % 2 == 0 ? 1 : -1);
    }
    return sum;
}

/// phi(x) = C(x/2 - 1, 2^(k-2) - 1) in the power basis.
inline Poly phi_poly(int k) { return binomial_poly(Rational(1, 2), -1, (1 << (k - 2)) - 1); }

/// Expansion coefficients by back substitution from the top degree, using
/// deg K_i = i.
inline std::vector<Rational> expansion_by_triangular_solve(int k) {
    const int m = (1 << k) - 1;
    const Poly phi = phi_poly(k);
    const int top = phi.degree();
    std::vector<Poly> basis;
    for (int i = 0; i <= m; ++i)
        basis.push_back(krawtchouk_poly(i, m));
    std::vector<Rational> c(m + 1);
    for (int d = top; d >= 0; --d) {
        Rational rest = phi.coeff(d);
        for (int i = d + 1; i <= top; ++i)
            rest -= c[i] * basis[i].coeff(d);
        c[d] = rest / basis[d].coeff(d);
    }
    return c;
}

/// Random maximal independent set of Omega_n by greedy insertion in a
/// shuffled order.
inline std::vector<std::uint64_t> random_maximal_independent(unsigned n, std::mt19937_64& rng) {
    std::vector<std::uint64_t> order(std::size_t{1} << n);
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::uint64_t> chosen;
    for (auto v : order) {
        bool ok = true;
        for (auto u : chosen)
            if (static_cast<unsigned>(std::popcount(u ^ v)) == n / 2) {
                ok = false;
                break;
            }
        if (ok)
            chosen.push_back(v);
    }
    return chosen;
}

/// Image of a mask set under a random coordinate permutation followed by a
/// random translation; both are automorphisms of Omega_n.
inline std::vector<std::uint64_t> random_automorphic_image(const std::vector<std::uint64_t>& masks, unsigned n,
                                                           std::mt19937_64& rng) {
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::uint64_t shift = rng() & (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    std::vector<std::uint64_t> out;
    out.reserve(masks.size());
    for (auto x : masks) {
        std::uint64_t y = 0;
        for (unsigned b = 0; b < n; ++b)
            if (x >> b & 1)
                y |= std::uint64_t{1} << perm[b];
        out.push_back(y ^ shift);
    }
    return out;
}

} // namespace oracle
