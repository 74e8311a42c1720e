#include "logrank/approxdual/exact_oracle.hpp"
#include "logrank/boolmatrix/factorize.hpp"
#include "logrank/boolmatrix/matrix_io.hpp"
#include "logrank/boolmatrix/mono.hpp"
#include "logrank/boolmatrix/mono_via_dual.hpp"
#include "logrank/cli/generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace logrank;

namespace {

BoolMatrix to_matrix(const oracle::Mat& m) { return BoolMatrix::from_rows(m); }

oracle::Mat to_mat(const BoolMatrix& m) {
    oracle::Mat out(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j) ? 1 : 0;
    return out;
}

BoolMatrix random_dedup(std::mt19937_64& g, std::size_t max_side) {
    const std::size_t k = 1 + g() % max_side, l = 1 + g() % max_side;
    return dedup(to_matrix(oracle::random_mat(g, k, l))).matrix;
}

}  // namespace

TEST(BoolMatrix, ConstructionAndAccess) {
    const BoolMatrix m = BoolMatrix::from_strings({"101", "010"});
    EXPECT_EQ(m.rows(), 2U);
    EXPECT_EQ(m.cols(), 3U);
    EXPECT_TRUE(m.at(0, 2));
    EXPECT_FALSE(m.at(1, 0));
    EXPECT_EQ(m.count_ones(), 3U);
    EXPECT_EQ(m.transpose().row_string(1), "01");
    EXPECT_THROW(BoolMatrix::from_strings({"10", "1"}), InvalidArgument);
}

TEST(BoolMatrix, DedupExamples) {
    const Dedup d = dedup(BoolMatrix::from_strings({"11", "11"}));
    EXPECT_EQ(d.matrix.rows(), 1U);
    EXPECT_EQ(d.matrix.cols(), 1U);
    EXPECT_EQ(d.row_map, (std::vector<std::size_t>{0, 0}));
    EXPECT_TRUE(is_deduplicated(BoolMatrix::identity(3)));
    EXPECT_FALSE(is_deduplicated(BoolMatrix::from_strings({"10", "10"})));
}

TEST(BoolMatrix, DedupPreservesEntriesThroughMaps) {
    std::mt19937_64 g(31);
    for (int trial = 0; trial < 200; ++trial) {
        const BoolMatrix m = to_matrix(oracle::random_mat(g, 1 + g() % 8, 1 + g() % 8));
        const Dedup d = dedup(m);
        ASSERT_TRUE(is_deduplicated(d.matrix));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) ASSERT_EQ(m.at(i, j), d.matrix.at(d.row_map[i], d.col_map[j]));
        ASSERT_EQ(rank_real(m), rank_real(d.matrix));
    }
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank_real(BoolMatrix::identity(5)), 5U);
    EXPECT_EQ(rank_real(BoolMatrix::constant(3, 4, true)), 1U);
    EXPECT_EQ(rank_real(BoolMatrix::constant(3, 4, false)), 0U);
    const BoolMatrix m = BoolMatrix::from_strings({"110", "011", "101"});
    EXPECT_EQ(rank_real(m), 3U);
    EXPECT_EQ(rank_f2(m), 2U);
    for (int n = 2; n <= 5; ++n) {
        const BoolMatrix ip = ip_matrix(n);
        EXPECT_EQ(rank_f2(ip), static_cast<std::size_t>(n));
        EXPECT_EQ(rank_real(ip), (std::size_t{1} << n) - 1);
    }
}

TEST(Rank, MatchesNaiveEliminationAndOrdering) {
    std::mt19937_64 g(32);
    for (int trial = 0; trial < 300; ++trial) {
        const oracle::Mat raw = oracle::random_mat(g, 1 + g() % 10, 1 + g() % 10);
        const BoolMatrix m = to_matrix(raw);
        const std::size_t rr = rank_real(m), rf = rank_f2(m);
        ASSERT_EQ(rr, oracle::rank_q(raw));
        ASSERT_EQ(rf, oracle::rank_f2(raw));
        ASSERT_LE(rf, rr);
        ASSERT_EQ(rr, rank_real(m.transpose()));
    }
}

TEST(Rank, BigIntegerPathAgreesWithMachinePath) {
    std::mt19937_64 g(33);
    const BoolMatrix m = to_matrix(oracle::random_mat(g, 40, 40));
    EXPECT_EQ(rank_real(m), oracle::rank_q(to_mat(m)));
}

TEST(Discrepancy, Examples) {
    EXPECT_EQ(discrepancy(BoolMatrix::identity(2)), 0);
    EXPECT_EQ(discrepancy(BoolMatrix::constant(2, 2, true)), 1);
    EXPECT_EQ(discrepancy(BoolMatrix::from_strings({"11", "10"})), make_rational(1, 2));
}

TEST(Factorize, ReproducesMatrixAsInnerProducts) {
    std::mt19937_64 g(34);
    for (int trial = 0; trial < 300; ++trial) {
        const BoolMatrix m = random_dedup(g, 12);
        const Factorization f = factorize_f2(m);
        ASSERT_EQ(static_cast<std::size_t>(f.rank), rank_f2(m));
        ASSERT_EQ(f.a.size(), m.rows());  // distinct rows give distinct vectors
        ASSERT_EQ(f.b.size(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                ASSERT_EQ(m.at(i, j), inner_product(f.row_vectors[i], f.col_vectors[j]) == 1);
    }
    EXPECT_THROW(factorize_f2(BoolMatrix::from_strings({"10", "10"})), InvalidArgument);
}

TEST(Factorize, IpMatrixRecoversFullCube) {
    const Factorization f = factorize_f2(ip_matrix(3));
    EXPECT_EQ(f.rank, 3);
    EXPECT_EQ(f.a, F2Set::full(3));
    EXPECT_EQ(f.b, F2Set::full(3));
}

TEST(MaxMono, Examples) {
    EXPECT_EQ(max_mono_exact(BoolMatrix::identity(4)).area(), 4U);  // off-diagonal 2x2 zero block
    const SubmatrixView id2 = max_mono_exact(BoolMatrix::identity(2));
    EXPECT_EQ(id2.area(), 1U);
    EXPECT_EQ(max_mono_exact(ip_matrix(2)).area(), 4U);
    EXPECT_EQ(max_mono_exact(BoolMatrix::constant(3, 5, false)).area(), 15U);
}

TEST(MaxMono, MatchesTwoSidedEnumeration) {
    std::mt19937_64 g(35);
    for (int trial = 0; trial < 200; ++trial) {
        const oracle::Mat raw = oracle::random_mat(g, 1 + g() % 5, 1 + g() % 5);
        const BoolMatrix m = to_matrix(raw);
        const SubmatrixView v = max_mono_exact(m);
        v.validate(m);
        ASSERT_TRUE(mono_color(m, v).has_value());
        ASSERT_EQ(v.area(), oracle::max_mono_area(raw));
        const SubmatrixView gr = greedy_mono(m);
        ASSERT_TRUE(mono_color(m, gr).has_value());
        ASSERT_LE(gr.area(), v.area());
    }
}

TEST(MaxMono, EqualsLargestDualPairOfFactorization) {
    std::mt19937_64 g(36);
    for (int trial = 0; trial < 200; ++trial) {
        const BoolMatrix m = random_dedup(g, 6);
        const Factorization f = factorize_f2(m);
        const DualPair p = exact_dual_oracle(f.a, f.b);
        ASSERT_EQ(max_mono_exact(m).area(), p.area());
        for (int probe = 0; probe < 20; ++probe) {
            SubmatrixView v;
            for (std::size_t i = 0; i < m.rows(); ++i)
                if (g() & 1U) v.rows.push_back(i);
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (g() & 1U) v.cols.push_back(j);
            if (v.rows.empty() || v.cols.empty()) continue;
            ASSERT_EQ(discrepancy(m, v), duality_measure(f.row_set(v.rows), f.col_set(v.cols)));
        }
    }
}

TEST(Biased, Examples) {
    const BoolMatrix m = BoolMatrix::from_strings({"11", "10"});
    const BiasedSubmatrix b = find_biased_submatrix(m);
    EXPECT_EQ(b.rank, 2U);
    EXPECT_TRUE(meets_bias_contract(m, b.view, b.rank));
    EXPECT_EQ(find_biased_submatrix(BoolMatrix::constant(3, 3, true)).strategy, "whole");
    EXPECT_THROW(find_biased_submatrix(BoolMatrix::from_strings({"10"})), ContractUnattainable);
    EXPECT_THROW(find_biased_submatrix(BoolMatrix::identity(2)), ContractUnattainable);
}

TEST(Biased, FindsContractViewExactlyWhenOneExists) {
    std::mt19937_64 g(37);
    for (int trial = 0; trial < 150; ++trial) {
        const oracle::Mat raw = oracle::random_mat(g, 1 + g() % 5, 1 + g() % 5);
        const BoolMatrix m = to_matrix(raw);
        const std::size_t r = rank_real(m);
        const bool exists = r == 0 || oracle::biased_exists(raw, r);
        try {
            const BiasedSubmatrix b = find_biased_submatrix(m);
            ASSERT_TRUE(exists);
            ASSERT_TRUE(meets_bias_contract(m, b.view, r));
        } catch (const ContractUnattainable&) {
            ASSERT_FALSE(exists);
        }
    }
}

TEST(MonoViaDual, ReturnsMonochromaticViewsWithCopies) {
    std::mt19937_64 g(38);
    int produced = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const BoolMatrix m = random_dedup(g, 8);
        try {
            const SubmatrixView v = find_mono_via_dual(m, [](const F2Set& a, const F2Set& b) { return exact_dual_oracle(a, b); });
            v.validate(m);
            ASSERT_TRUE(mono_color(m, v).has_value());
            ++produced;
        } catch (const ContractUnattainable&) {
        }
    }
    EXPECT_GT(produced, 50);
}

TEST(MatrixIo, RoundTripAndErrors) {
    std::mt19937_64 g(39);
    for (int trial = 0; trial < 30; ++trial) {
        const BoolMatrix m = to_matrix(oracle::random_mat(g, 1 + g() % 70, 1 + g() % 70));
        ASSERT_EQ(parse_matrix(format_matrix(m)), m);
    }
    EXPECT_EQ(parse_matrix("# c\n2 2\n10\n01\n"), BoolMatrix::identity(2));
    EXPECT_THROW(parse_matrix("2 2\n10\n"), ParseError);
    EXPECT_THROW(parse_matrix("2 2\n10\n0x\n"), ParseError);
    EXPECT_THROW(parse_matrix("1 2\n101\n"), ParseError);
}
