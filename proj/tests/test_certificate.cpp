#include "omega/certificate.hpp"
#include "omega/construction.hpp"
#include "omega/gf2.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace omega;

TEST(PhiEval, Examples) {
    EXPECT_EQ(phi_eval(0, 3), -1);
    EXPECT_EQ(phi_eval(4, 3), 1);
    EXPECT_EQ(phi_eval(6, 4), 0);
    EXPECT_THROW(phi_eval(3, 3), error);
    EXPECT_THROW(phi_eval(0, 2), error);
    EXPECT_THROW(phi_eval(8, 3), error);
}

TEST(PhiEvalRational, Examples) {
    EXPECT_EQ(phi_eval_rational(3, 3), Rational(1, 2));
    EXPECT_EQ(phi_eval_rational(2, 3), 0);
    EXPECT_THROW(phi_eval_rational(0, 2), error);
}

TEST(PhiEvalRational, AgreesWithIntegerRouteAndPolynomial) {
    for (int k = 3; k <= 6; ++k) {
        const auto poly = oracle::phi_poly(k);
        for (std::int64_t xi = 0; xi <= (1 << k) - 1; ++xi) {
            if (xi % 2 == 0) {
                ASSERT_EQ(phi_eval_rational(xi, k), Rational(phi_eval(xi, k)));
            }
            ASSERT_EQ(phi_eval_rational(xi, k), poly(Rational(xi)));
        }
    }
}

TEST(KrawtchoukExpand, DimensionEight) {
    const auto c = krawtchouk_expand(3);
    ASSERT_EQ(c.size(), 8u);
    EXPECT_EQ(c[0], Rational(3, 4));
    EXPECT_EQ(c[1], Rational(-1, 4));
    for (std::size_t i = 2; i < c.size(); ++i)
        EXPECT_EQ(c[i], 0);
}

TEST(KrawtchoukExpand, MatchesTriangularSolve) {
    for (int k : {3, 4, 5}) {
        const auto c = krawtchouk_expand(k);
        const auto oracle_c = oracle::expansion_by_triangular_solve(k);
        ASSERT_EQ(c, oracle_c) << k;
    }
}

TEST(KrawtchoukExpand, VanishesAboveDegree) {
    for (int k : {3, 4, 5, 6}) {
        const auto c = krawtchouk_expand(k);
        EXPECT_TRUE(expansion_degree_ok(c, k));
        EXPECT_NE(c[(1u << (k - 2)) - 1], 0) << "top coefficient must be nonzero";
    }
}

TEST(KrawtchoukExpand, ReconstructsPhiPointwise) {
    const int k = 4;
    const int m = 15;
    const auto c = krawtchouk_expand(k);
    for (int xi = 0; xi <= m; ++xi) {
        Rational value = 0;
        for (int i = 0; i <= m; ++i)
            value += c[i] * krawtchouk(i, xi, m);
        EXPECT_EQ(value, phi_eval_rational(xi, k)) << xi;
    }
}

TEST(Mod2IdentityCheck, HoldsForSmallExponents) {
    for (int k : {3, 4, 5, 6, 7}) {
        const auto check = mod2_identity_check(k);
        EXPECT_TRUE(check.ok) << k;
        EXPECT_TRUE(check.diagonal_odd);
        EXPECT_TRUE(check.failing.empty());
    }
}

TEST(Mod2IdentityCheck, AgreesWithBigIntegerParity) {
    for (int k = 3; k <= 10; ++k) {
        const std::uint64_t r = (std::uint64_t{1} << (k - 2)) - 1;
        const std::uint64_t excluded = std::uint64_t{1} << (k - 2);
        bool expected = is_odd(binom(-1, r));
        for (std::uint64_t s = 1; s < (std::uint64_t{1} << (k - 1)); ++s)
            if (s != excluded && is_odd(binom(BigInt(s - 1), r)))
                expected = false;
        EXPECT_EQ(mod2_identity_check(k).ok, expected) << k;
        // The excluded point is exactly where the parity is odd.
        EXPECT_TRUE(is_odd(binom(BigInt(excluded - 1), r)));
    }
}

TEST(BuildRestrictedX, Examples) {
    const auto single = build_restricted_X(VertexSet(7, {0}), 3);
    ASSERT_EQ(single.rows, 1u);
    EXPECT_EQ(single.at(0, 0), -1);

    const auto pair = build_restricted_X(VertexSet(7, {0b0000000, 0b0000011}), 3);
    EXPECT_EQ(pair.at(0, 0), -1);
    EXPECT_EQ(pair.at(0, 1), 0);
    EXPECT_EQ(pair.at(1, 0), 0);
    EXPECT_EQ(pair.at(1, 1), -1);
}

TEST(BuildRestrictedX, RejectsInadmissibleDistance) {
    try {
        build_restricted_X(VertexSet(7, {0b0000000, 0b0001111}), 3);
        FAIL() << "distance 4 must be rejected";
    } catch (const inadmissible_distance_error& e) {
        EXPECT_EQ(e.distance(), 4u);
        EXPECT_EQ(e.first().mask(), 0u);
        EXPECT_EQ(e.second().mask(), 0b0001111u);
    }
    EXPECT_THROW(build_restricted_X(VertexSet(7, {0, 1}), 3), inadmissible_distance_error);
    EXPECT_THROW(build_restricted_X(VertexSet(8, {0}), 3), error);
}

TEST(Gf2Rank, Basics) {
    EXPECT_EQ(gf2_rank(Gf2Matrix::identity(130)), 130u);
    EXPECT_EQ(gf2_rank(Gf2Matrix(70, 90)), 0u);
    Gf2Matrix m(3, 3);
    // rows 110, 011, 101: third is the sum of the first two
    m.set(0, 0, true);
    m.set(0, 1, true);
    m.set(1, 1, true);
    m.set(1, 2, true);
    m.set(2, 0, true);
    m.set(2, 2, true);
    EXPECT_EQ(gf2_rank(m), 2u);
    EXPECT_THROW(m.get(3, 0), error);
}

TEST(Gf2Rank, InvariantUnderRowPermutationAndBoundedByShape) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t rows = 1 + rng() % 100, cols = 1 + rng() % 150;
        Gf2Matrix a(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                a.set(r, c, rng() & 1);
        std::vector<std::size_t> perm(rows);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        Gf2Matrix b(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                b.set(perm[r], c, a.get(r, c));
        ASSERT_EQ(gf2_rank(a), gf2_rank(b));
        ASSERT_LE(gf2_rank(a), std::min(rows, cols));
        // Appending the XOR of two rows keeps the rank.
        if (rows >= 2) {
            Gf2Matrix c(rows + 1, cols);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t col = 0; col < cols; ++col)
                    c.set(r, col, a.get(r, col));
            for (std::size_t col = 0; col < cols; ++col)
                c.set(rows, col, a.get(0, col) != a.get(1, col));
            ASSERT_EQ(gf2_rank(c), gf2_rank(a));
        }
    }
}

TEST(FamilyRankBound, Values) {
    EXPECT_EQ(family_rank_bound(3), 8);
    EXPECT_EQ(family_rank_bound(4), 576);
    EXPECT_EQ(family_rank_bound(5), 3572224);
    EXPECT_THROW(family_rank_bound(2), error);
}

TEST(Certify, TrivialCase) {
    const auto report = certify(2);
    EXPECT_TRUE(report.trivial);
    EXPECT_TRUE(report.valid);
    EXPECT_EQ(report.total_bound, 4);
    EXPECT_TRUE(report.matches_a_n);
    const auto with_witness = certify(2, build_extremal_set(4));
    EXPECT_TRUE(with_witness.valid);
    EXPECT_TRUE(with_witness.witness->equality);
}

TEST(Certify, WithConstructedWitness) {
    for (int k : {3, 4}) {
        const auto report = certify(k, build_extremal_set(1 << k));
        ASSERT_TRUE(report.valid) << k;
        EXPECT_EQ(report.total_bound, a_n(1 << k));
        ASSERT_TRUE(report.witness);
        EXPECT_TRUE(report.witness->equality);
        EXPECT_EQ(report.witness->independent, std::optional<bool>(true));
        for (const auto& f : report.witness->families) {
            EXPECT_TRUE(f.congruent_to_identity);
            EXPECT_EQ(f.gf2_rank, f.size);
        }
    }
}

TEST(Certify, WithoutWitnessUpToSixtyFour) {
    const auto five = certify(5);
    EXPECT_TRUE(five.valid);
    EXPECT_EQ(five.total_bound, 14288896);
    for (int k = 3; k <= 6; ++k) {
        const auto report = certify(k);
        EXPECT_TRUE(report.valid);
        EXPECT_EQ(report.total_bound, a_n(1 << k));
        EXPECT_EQ(report.phi_values.size(), static_cast<std::size_t>(1 << k));
    }
    EXPECT_THROW(certify(7), error);
    EXPECT_THROW(certify(1), error);
}

TEST(Certify, RejectsBrokenWitness) {
    // Add a vertex orthogonal to a member: the same-label family then holds a
    // pair at distance 2^(k-1).
    const auto base = build_extremal_set(8);
    std::vector<std::uint64_t> masks(base.masks().begin(), base.masks().end());
    masks.push_back(0b00001111);
    const auto report = certify(3, VertexSet(8, masks));
    EXPECT_FALSE(report.valid);
    EXPECT_FALSE(report.reasons.empty());
    EXPECT_EQ(report.witness->independent, std::optional<bool>(false));

    const auto wrong_dim = certify(3, build_extremal_set(16));
    EXPECT_FALSE(wrong_dim.valid);
}

TEST(Certify, RandomIndependentSetsRespectTheRankChain) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const auto set = VertexSet(8, oracle::random_maximal_independent(8, rng));
        const auto report = certify(3, set);
        ASSERT_TRUE(report.valid);
        for (const auto& f : report.witness->families) {
            ASSERT_TRUE(f.congruent_to_identity);
            ASSERT_EQ(f.gf2_rank, f.size);
            ASSERT_LE(f.size, 8u);
        }
    }
    for (int trial = 0; trial < 2; ++trial) {
        const auto set = VertexSet(16, oracle::random_maximal_independent(16, rng));
        const auto report = certify(4, set);
        ASSERT_TRUE(report.valid);
        for (const auto& f : report.witness->families)
            ASSERT_LE(f.size, 576u);
    }
}

TEST(SpectralFormCheck, DimensionEight) {
    EXPECT_TRUE(spectral_form_check(3));
    EXPECT_THROW(spectral_form_check(4), error);
}
