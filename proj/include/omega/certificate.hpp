#pragma once

// Mechanical rank certificate for alpha(Omega_n) <= a_n at n = 2^k.
//
// Work happens in Q_m with m = 2^k - 1. For phi(x) = C(x/2 - 1, 2^(k-2) - 1):
//  - phi expands in K_0..K_{2^(k-2)-1} only (degree check),
//  - on the admissible distances {2s : s < 2^(k-1), s != 2^(k-2)} phi is even
//    except at 0 where it is odd (mod-2 check),
// so the principal submatrix of X = sum_j phi(j) A_j on any truncated family
// is the identity mod 2, hence invertible, while rank X is at most
// sum_{i < 2^(k-2)} C(m, i). Four families give the total bound.

#include "omega/bose_mesner.hpp"
#include "omega/combinatorics.hpp"
#include "omega/construction.hpp"
#include "omega/errors.hpp"
#include "omega/exact.hpp"
#include "omega/gf2.hpp"
#include "omega/hypercube.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace omega {

inline constexpr int max_certificate_exponent = 6;  // m = 63 keeps tables within 64
inline constexpr int max_parity_exponent = 40;

namespace detail {

inline void require_exponent(int k, int max_k, const char* who) {
    require(k >= 3 && k <= max_k, std::string(who) + ": exponent must satisfy 3 <= k <= " +
                                      std::to_string(max_k) + ", got " + std::to_string(k));
}

/// 2^(k-2) - 1, the degree of phi.
inline std::uint64_t phi_degree(int k) { return (std::uint64_t{1} << (k - 2)) - 1; }

} // namespace detail

/// phi at an even argument, as the integer C(xi/2 - 1, 2^(k-2) - 1).
inline BigInt phi_eval(std::int64_t xi, int k) {
    detail::require_exponent(k, max_parity_exponent, "phi_eval");
    require(xi % 2 == 0, "phi_eval: odd argument " + std::to_string(xi) + ", use phi_eval_rational");
    require(xi >= 0 && xi <= (std::int64_t{1} << k) - 2, "phi_eval: argument must lie in [0, 2^k - 2]");
    return binom(xi / 2 - 1, detail::phi_degree(k));
}

/// phi as a polynomial: prod_{t < r} (xi - 2 - 2t) / (2^r r!), r = 2^(k-2) - 1.
inline Rational phi_eval_rational(std::int64_t xi, int k) {
    detail::require_exponent(k, max_parity_exponent, "phi_eval_rational");
    const auto r = detail::phi_degree(k);
    BigInt numerator = 1;
    BigInt denominator = pow2(static_cast<unsigned>(r));
    for (std::uint64_t t = 0; t < r; ++t) {
        numerator *= BigInt(xi) - 2 - 2 * BigInt(t);
        denominator *= t + 1;
    }
    return Rational(numerator, denominator);
}

/// Coefficients c_0..c_m with phi = sum_i c_i K_i(.; m), from the dual
/// orthogonality relation c_i = 2^-m sum_j phi(j) K_j(i; m). The expansion is
/// re-evaluated at every integer point of [0, m]; a mismatch is fatal.
inline std::vector<Rational> krawtchouk_expand(int k) {
    detail::require_exponent(k, max_certificate_exponent, "krawtchouk_expand");
    const int m = (1 << k) - 1;
    const auto& table = cached_krawtchouk_table(m);
    std::vector<Rational> phi(m + 1);
    for (int j = 0; j <= m; ++j)
        phi[j] = phi_eval_rational(j, k);

    const Rational scale(1, pow2(static_cast<unsigned>(m)));
    std::vector<Rational> coefficients(m + 1);
    for (int i = 0; i <= m; ++i) {
        Rational sum = 0;
        for (int j = 0; j <= m; ++j)
            if (phi[j] != 0)
                sum += phi[j] * table.at(i, j);
        coefficients[i] = sum * scale;
    }

    for (int x = 0; x <= m; ++x) {
        Rational value = 0;
        for (int i = 0; i <= m; ++i)
            if (coefficients[i] != 0)
                value += coefficients[i] * table.at(x, i);
        if (value != phi[x])
            fail(error_kind::internal, "krawtchouk_expand: reconstruction mismatch at xi = " + std::to_string(x));
    }
    return coefficients;
}

/// True when c_i = 0 for every i >= 2^(k-2).
inline bool expansion_degree_ok(const std::vector<Rational>& coefficients, int k) {
    for (std::size_t i = std::size_t{1} << (k - 2); i < coefficients.size(); ++i)
        if (coefficients[i] != 0)
            return false;
    return true;
}

struct Mod2Check {
    bool ok = false;
    bool diagonal_odd = false;          // phi(0) odd
    std::vector<std::uint64_t> failing; // admissible s >= 1 with phi(2s) odd
};

/// phi(0) odd and phi(2s) even for all admissible s >= 1. Parity of
/// phi(2s) = C(s - 1, 2^(k-2) - 1) comes from Lucas; phi(0) = C(-1, r) is
/// evaluated directly since Lucas needs non-negative arguments.
inline Mod2Check mod2_identity_check(int k) {
    detail::require_exponent(k, max_parity_exponent, "mod2_identity_check");
    const auto r = detail::phi_degree(k);
    const std::uint64_t excluded = std::uint64_t{1} << (k - 2);
    const std::uint64_t s_end = std::uint64_t{1} << (k - 1);
    Mod2Check check;
    check.diagonal_odd = is_odd(binom(-1, r));
    for (std::uint64_t s = 1; s < s_end; ++s) {
        if (s == excluded)
            continue;
        if (binom_mod2(s - 1, r) != 0)
            check.failing.push_back(s);
    }
    check.ok = check.diagonal_odd && check.failing.empty();
    return check;
}

/// Dense integer matrix, row-major.
struct IntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BigInt> entries;

    const BigInt& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

class inadmissible_distance_error : public error {
public:
    inadmissible_distance_error(Vertex first, Vertex second, unsigned distance)
        : error(error_kind::validation,
                "build_restricted_X: vertices at inadmissible distance " + std::to_string(distance)),
          first_(first), second_(second), distance_(distance) {}

    const Vertex& first() const noexcept { return first_; }
    const Vertex& second() const noexcept { return second_; }
    unsigned distance() const noexcept { return distance_; }

private:
    Vertex first_;
    Vertex second_;
    unsigned distance_;
};

inline bool is_admissible_distance(unsigned d, int k) {
    return d % 2 == 0 && d / 2 < (1u << (k - 1)) && d / 2 != (1u << (k - 2));
}

/// Principal submatrix of X on a truncated family: entry (x, y) = phi(d(x, y)).
inline IntegerMatrix build_restricted_X(const VertexSet& family, int k) {
    detail::require_exponent(k, max_certificate_exponent, "build_restricted_X");
    const unsigned m = (1u << k) - 1;
    require(family.dim() == m, "build_restricted_X: family dimension must be 2^k - 1 = " + std::to_string(m));

    std::vector<BigInt> phi_even(m + 1);
    for (unsigned d = 0; d <= m; d += 2)
        phi_even[d] = phi_eval(d, k);

    const auto masks = family.masks();
    IntegerMatrix x{masks.size(), masks.size(), std::vector<BigInt>(masks.size() * masks.size())};
    for (std::size_t a = 0; a < masks.size(); ++a) {
        x.entries[a * x.cols + a] = phi_even[0];
        for (std::size_t b = a + 1; b < masks.size(); ++b) {
            const auto d = static_cast<unsigned>(std::popcount(masks[a] ^ masks[b]));
            if (!is_admissible_distance(d, k))
                throw inadmissible_distance_error(family[a], family[b], d);
            x.entries[a * x.cols + b] = phi_even[d];
            x.entries[b * x.cols + a] = phi_even[d];
        }
    }
    return x;
}

inline Gf2Matrix reduce_mod2(const IntegerMatrix& m) {
    Gf2Matrix out(m.rows, m.cols);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            if (is_odd(m.at(r, c)))
                out.set(r, c, true);
    return out;
}

/// sum_{i < 2^(k-2)} C(2^k - 1, i); refuses unless the degree and mod-2
/// checks both hold.
inline BigInt family_rank_bound(int k) {
    detail::require_exponent(k, max_certificate_exponent, "family_rank_bound");
    if (!mod2_identity_check(k).ok)
        fail(error_kind::validation, "family_rank_bound: mod-2 identity fails, bound not certified");
    if (!expansion_degree_ok(krawtchouk_expand(k), k))
        fail(error_kind::validation, "family_rank_bound: expansion degree too high, bound not certified");
    const std::uint64_t m = (std::uint64_t{1} << k) - 1;
    BigInt sum = 0;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << (k - 2)); ++i)
        sum += binom(BigInt(m), i);
    return sum;
}

struct FamilyEvidence {
    std::string label;
    std::size_t size = 0;
    bool congruent_to_identity = false;
    std::size_t gf2_rank = 0;
    bool full_rank = false;
};

struct WitnessEvidence {
    std::size_t size = 0;
    std::optional<bool> independent;  // unset when too large to scan
    std::vector<FamilyEvidence> families;
    bool within_bound = false;
    bool equality = false;
};

struct CertificateReport {
    int k = 0;
    int m = 0;
    bool trivial = false;
    std::vector<Rational> phi_values;
    std::vector<Rational> coefficients;
    bool mod2_ok = false;
    std::vector<std::uint64_t> mod2_failures;
    bool degree_ok = false;
    BigInt family_rank_bound = 0;
    BigInt total_bound = 0;
    bool matches_a_n = false;
    std::optional<WitnessEvidence> witness;
    bool valid = false;
    std::vector<std::string> reasons;
};

namespace detail {

inline void attach_witness(CertificateReport& report, const VertexSet& witness) {
    WitnessEvidence evidence;
    evidence.size = witness.size();
    const unsigned n = 1u << report.k;
    if (witness.dim() != n) {
        report.reasons.push_back("witness dimension " + std::to_string(witness.dim()) + " is not 2^k = " +
                                 std::to_string(n));
        report.witness = evidence;
        return;
    }
    if (witness.size() <= exhaustive_guard) {
        evidence.independent = verify_independent(witness).independent;
        if (!*evidence.independent)
            report.reasons.push_back("witness is not an independent set");
    }
    if (report.k >= 3) {
        const auto split = split_truncate(witness);
        const std::pair<const char*, const VertexSet*> families[] = {{"even_plus", &split.even_plus},
                                                                     {"even_minus", &split.even_minus},
                                                                     {"odd_plus", &split.odd_plus},
                                                                     {"odd_minus", &split.odd_minus}};
        for (const auto& [label, family] : families) {
            FamilyEvidence fe;
            fe.label = label;
            fe.size = family->size();
            try {
                const auto reduced = reduce_mod2(build_restricted_X(*family, report.k));
                fe.congruent_to_identity = reduced.is_identity();
                fe.gf2_rank = gf2_rank(reduced);
                fe.full_rank = fe.gf2_rank == fe.size;
            } catch (const inadmissible_distance_error& e) {
                report.reasons.push_back(std::string("family ") + label + ": inadmissible distance " +
                                         std::to_string(e.distance()));
            }
            if (!fe.congruent_to_identity)
                report.reasons.push_back(std::string("family ") + label + ": restricted X is not I mod 2");
            else if (!fe.full_rank)
                report.reasons.push_back(std::string("family ") + label + ": GF(2) rank below family size");
            if (fe.size > report.family_rank_bound)
                report.reasons.push_back(std::string("family ") + label + " exceeds the family rank bound");
            evidence.families.push_back(fe);
        }
    }
    evidence.within_bound = BigInt(evidence.size) <= report.total_bound;
    evidence.equality = BigInt(evidence.size) == report.total_bound;
    if (!evidence.within_bound)
        report.reasons.push_back("witness is larger than the certified bound");
    report.witness = evidence;
}

} // namespace detail

/// Runs the full certificate at n = 2^k. k = 2 yields the trivial report.
inline CertificateReport certify(int k, const std::optional<VertexSet>& witness = std::nullopt) {
    require(k >= 2 && k <= max_certificate_exponent,
            "certify: exponent must satisfy 2 <= k <= 6, got " + std::to_string(k));
    CertificateReport report;
    report.k = k;
    report.m = (1 << k) - 1;

    if (k == 2) {
        report.trivial = true;
        report.mod2_ok = true;
        report.degree_ok = true;
        report.family_rank_bound = 1;
        report.total_bound = 4;
    } else {
        for (int j = 0; j <= report.m; ++j)
            report.phi_values.push_back(phi_eval_rational(j, k));
        report.coefficients = krawtchouk_expand(k);
        report.degree_ok = expansion_degree_ok(report.coefficients, k);
        const auto parity = mod2_identity_check(k);
        report.mod2_ok = parity.ok;
        report.mod2_failures = parity.failing;
        if (!parity.diagonal_odd)
            report.reasons.push_back("phi(0) is even");
        if (!parity.failing.empty())
            report.reasons.push_back("phi(2s) is odd at an admissible s");
        if (!report.degree_ok)
            report.reasons.push_back("Krawtchouk expansion has a nonzero coefficient at i >= 2^(k-2)");
        if (report.mod2_ok && report.degree_ok) {
            report.family_rank_bound = family_rank_bound(k);
            report.total_bound = 4 * report.family_rank_bound;
        }
    }

    report.matches_a_n = report.total_bound == a_n(1 << k);
    if (report.mod2_ok && report.degree_ok && !report.matches_a_n)
        report.reasons.push_back("total bound differs from a_n");
    if (witness)
        detail::attach_witness(report, *witness);
    report.valid = report.reasons.empty();
    return report;
}

/// X = sum_j phi(j) A_j against 2^m sum_i c_i E_i, entrywise and exact.
/// Dense, so limited to k = 3 (128 x 128).
inline bool spectral_form_check(int k) {
    require(k == 3, "spectral_form_check: dense check is limited to k = 3");
    const int m = (1 << k) - 1;
    const std::size_t side = std::size_t{1} << m;
    std::vector<Rational> phi(m + 1);
    for (int j = 0; j <= m; ++j)
        phi[j] = phi_eval_rational(j, k);
    const auto x = ExactRationalMatrix::from_function(
        side, side, [&](std::size_t a, std::size_t b) { return phi[std::popcount(a ^ b)]; });

    const auto coefficients = krawtchouk_expand(k);
    ExactRationalMatrix spectral(side, side);
    for (int i = 0; i <= m; ++i)
        if (coefficients[i] != 0)
            spectral = spectral + projection_matrix(i, m).scaled(coefficients[i]);
    spectral = spectral.scaled(Rational(pow2(static_cast<unsigned>(m))));
    return x == spectral;
}

} // namespace omega
