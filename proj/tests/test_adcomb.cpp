#include "logrank/adcomb/bsg.hpp"
#include "logrank/adcomb/doubling.hpp"
#include "logrank/adcomb/pfr.hpp"
#include "logrank/cli/generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace logrank;

namespace {

F2Set unit_vectors(int n) {
    std::vector<Word> w;
    for (int i = 0; i < n; ++i) w.push_back(Word{1} << i);
    return F2Set(n, w);
}

std::vector<std::uint32_t> words(const F2Set& s) { return {s.begin(), s.end()}; }

bool is_affine_subspace_naive(const std::vector<std::uint32_t>& a) {
    // x + V with V = a + a[0] closed under addition
    std::set<std::uint32_t> shifted;
    for (auto x : a) shifted.insert(x ^ a[0]);
    for (auto x : shifted)
        for (auto y : shifted)
            if (!shifted.count(x ^ y)) return false;
    return true;
}

}  // namespace

TEST(Doubling, Examples) {
    const DoublingReport v = doubling_report(F2Set(3, {0, 3, 5, 6}));
    EXPECT_EQ(v.doubling, 1);
    EXPECT_TRUE(v.linear_subspace);
    const DoublingReport coset = doubling_report(F2Set(3, {1, 2, 4, 7}));
    EXPECT_EQ(coset.doubling, 1);
    EXPECT_TRUE(coset.affine_subspace);
    EXPECT_FALSE(coset.linear_subspace);
    const DoublingReport e = doubling_report(unit_vectors(4));
    EXPECT_EQ(e.sumset_size, 7U);  // 0 and the six weight-2 vectors
    EXPECT_EQ(e.doubling, make_rational(7, 4));
    EXPECT_EQ(e.span_size, 16U);
    EXPECT_TRUE(e.within_freiman);
    EXPECT_TRUE(e.within_green_tao);
    EXPECT_THROW(doubling_report(F2Set(3)), InvalidArgument);
}

TEST(Doubling, UnitDoublingCharacterisesCosetsExhaustively) {
    for (int n = 1; n <= 4; ++n) {
        const Word cube = Word{1} << n;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cube); ++mask) {
            std::vector<Word> w;
            for (Word x = 0; x < cube; ++x)
                if ((mask >> x) & 1U) w.push_back(x);
            const F2Set a(n, w);
            const DoublingReport r = doubling_report(a);
            ASSERT_EQ(r.affine_subspace, is_affine_subspace_naive(words(a)));
            ASSERT_EQ(r.doubling == 1, r.affine_subspace);
            ASSERT_EQ(r.linear_subspace, r.affine_subspace && a.contains(0));
            ASSERT_GE(r.doubling, 1);
            ASSERT_TRUE(r.within_green_tao);
        }
    }
}

TEST(Bsg, SubspaceIsItsOwnAnswer) {
    Rng rng(5);
    const F2Set v = random_subspace(8, 4, rng);
    const BsgResult r = bsg_extract(v, v, 1, 3);
    EXPECT_EQ(r.density, 1);
    EXPECT_EQ(r.self_doubling, 1);
    EXPECT_EQ(r.subset.size(), v.size());
}

TEST(Bsg, DensityGuard) {
    const F2Set a = unit_vectors(5);
    const F2Set s(5, {0});
    EXPECT_EQ(sum_density(a, s), make_rational(1, 5));  // only the diagonal pairs sum to 0
    EXPECT_THROW(bsg_extract(a, s, make_rational(1, 2), 1), DensityTooLow);
    EXPECT_THROW(bsg_extract(a, s, 0, 1), InvalidArgument);
}

TEST(Bsg, ResultIsInsideAboveFloorAndDeterministic) {
    Rng rng(6);
    for (int trial = 0; trial < 60; ++trial) {
        const F2Set a = subspace_plus_noise(8, 3 + static_cast<int>(trial % 3), 1 + trial % 7, rng);
        const F2Set s = sumset(a, a);
        const Rational rho = sum_density(a, s);
        const BsgResult r = bsg_extract(a, s, rho, static_cast<std::uint64_t>(trial));
        ASSERT_TRUE(r.subset.is_subset_of(a));
        ASSERT_GE(r.subset.size(), r.size_floor);
        ASSERT_LE(r.self_doubling, make_rational(static_cast<std::int64_t>(s.size()), static_cast<std::int64_t>(a.size())));
        const BsgResult again = bsg_extract(a, s, rho, static_cast<std::uint64_t>(trial));
        ASSERT_EQ(again.subset, r.subset);
    }
}

TEST(Pfr, Examples) {
    const PfrResult e = pfr_extract(unit_vectors(8));
    EXPECT_EQ(e.subset.size(), 3U);
    EXPECT_LE(e.span_size, 8U);

    Rng rng(7);
    const F2Set v = random_subspace(6, 3, rng);
    Word outside = 1;
    while (v.contains(outside)) ++outside;
    std::vector<Word> w(v.begin(), v.end());
    w.push_back(outside);
    const F2Set a(6, w);
    EXPECT_EQ(pfr_extract(a, PfrStrategy::Exact).subset, v);
    const PfrResult greedy = pfr_extract(a, PfrStrategy::Greedy);  // heuristic: only the span bound is promised
    EXPECT_LE(greedy.span_size, a.size());
    EXPECT_TRUE(greedy.subset.is_subset_of(a));

    const PfrResult single = pfr_extract(F2Set(3, {5}));
    EXPECT_TRUE(single.singleton_waiver);
    EXPECT_FALSE(pfr_extract(F2Set(3, {0})).singleton_waiver);
    Config tiny;
    tiny.exact_cap = 2;
    EXPECT_THROW(pfr_extract(unit_vectors(4), PfrStrategy::Exact, tiny), CapExceeded);
}

TEST(Pfr, ExactMatchesSubsetEnumerationAndDominatesGreedy) {
    std::mt19937_64 g(40);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + static_cast<int>(g() % 5);
        const std::size_t size = 1 + g() % std::min<std::size_t>(12, std::size_t{1} << n);
        const F2Set a(n, oracle::random_words(g, n, size));
        const PfrResult exact = pfr_extract(a, PfrStrategy::Exact);
        const PfrResult greedy = pfr_extract(a, PfrStrategy::Greedy);
        if (a.size() > 1) {
            ASSERT_EQ(exact.subset.size(), oracle::max_pfr(words(a)));
        }
        ASSERT_GE(exact.subset.size(), greedy.subset.size());
        for (const PfrResult* r : {&exact, &greedy}) {
            ASSERT_TRUE(r->subset.is_subset_of(a));
            if (!r->singleton_waiver) {
                ASSERT_LE(r->span_size, a.size());
            }
            ASSERT_EQ(r->span_size, span_size(r->subset));
        }
    }
}
