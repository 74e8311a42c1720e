#include "logrank/f2core/set_io.hpp"
#include "logrank/f2core/spectrum.hpp"
#include "oracles.hpp"

#include <bit>
#include <gtest/gtest.h>

using namespace logrank;

namespace {

F2Vector v(const char* s) { return F2Vector::parse(s); }

F2Set set_of(std::initializer_list<const char*> items) {
    std::vector<F2Vector> vs;
    for (const char* s : items) vs.push_back(F2Vector::parse(s));
    return F2Set::from_vectors(static_cast<int>(std::string(*items.begin()).size()), vs);
}

std::vector<std::uint32_t> words(const F2Set& s) { return {s.begin(), s.end()}; }

F2Set random_set(std::mt19937_64& g, int n, std::size_t count) { return F2Set(n, oracle::random_words(g, n, count)); }

}  // namespace

TEST(F2Vector, ParseIsMostSignificantFirst) {
    EXPECT_EQ(v("110").bits(), 6U);
    EXPECT_TRUE(v("110").bit(2));
    EXPECT_FALSE(v("110").bit(0));
    EXPECT_EQ(v("0110").str(), "0110");
    EXPECT_THROW(F2Vector::parse("01a"), ParseError);
    EXPECT_THROW(F2Vector(2, 4), InvalidArgument);
}

TEST(F2Vector, InnerProductExamples) {
    EXPECT_EQ(inner_product(v("101"), v("110")), 1);
    EXPECT_EQ(inner_product(v("111"), v("111")), 1);
    for (Word b = 0; b < 8; ++b) EXPECT_EQ(inner_product(F2Vector::zero(3), F2Vector(3, b)), 0);
    EXPECT_THROW(inner_product(v("10"), v("100")), DimensionMismatch);
}

TEST(F2Vector, InnerProductMatchesNaive) {
    for (Word a = 0; a < 64; ++a)
        for (Word b = 0; b < 64; ++b) ASSERT_EQ(inner_product(a, b), oracle::dot(a, b, 6));
}

TEST(F2Set, CanonicalOrderAndDedup) {
    const F2Set s(3, {5, 1, 5, 0});
    ASSERT_EQ(s.size(), 3U);
    EXPECT_EQ(s[0], 0U);
    EXPECT_EQ(s[2], 5U);
    EXPECT_TRUE(s.contains(1));
    EXPECT_THROW(F2Set(2, {4}), InvalidArgument);
}

TEST(Sumset, Examples) {
    EXPECT_EQ(sumset(set_of({"00"}), set_of({"00"})), set_of({"00"}));
    const F2Set a = set_of({"00", "01", "10"});
    EXPECT_EQ(sumset(a, a), set_of({"00", "01", "10", "11"}));
    const F2Set v3 = set_of({"000", "011", "101", "110"});
    EXPECT_EQ(sumset(v3, v3), v3);
    EXPECT_THROW(sumset(set_of({"00"}), set_of({"000"})), DimensionMismatch);
}

TEST(Sumset, DenseAndSparseMatchNaive) {
    std::mt19937_64 g(11);
    Config sparse;
    sparse.dense_cap = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(g() % 9);
        const std::size_t cap = std::size_t{1} << n;
        const F2Set a = random_set(g, n, 1 + g() % cap), b = random_set(g, n, 1 + g() % cap);
        const auto naive = oracle::sumset(words(a), words(b));
        const F2Set expect(n, std::vector<Word>(naive.begin(), naive.end()));
        ASSERT_EQ(sumset(a, b), expect);
        ASSERT_EQ(sumset(a, b, sparse), expect);
        ASSERT_EQ(sumset(b, a), expect);  // commutative
    }
}

TEST(Sumset, MonotoneUnderInclusion) {
    std::mt19937_64 g(12);
    for (int trial = 0; trial < 100; ++trial) {
        const F2Set b = random_set(g, 7, 20);
        const F2Set a = b.filter([&](Word) { return (g() & 1U) != 0; });
        if (a.empty()) continue;
        ASSERT_TRUE(sumset(a, a).is_subset_of(sumset(b, b)));
    }
}

TEST(Span, Examples) {
    EXPECT_EQ(span(set_of({"01", "10"})), set_of({"00", "01", "10", "11"}));
    EXPECT_EQ(span(F2Set(4)), F2Set(4, {0}));
    const F2Set s = span(set_of({"110", "011", "101"}));
    EXPECT_EQ(s, set_of({"000", "110", "011", "101"}));
    EXPECT_EQ(span_rank(set_of({"110", "011", "101"})), 2);
}

TEST(Span, MatchesClosureAndIsPowerOfTwo) {
    std::mt19937_64 g(13);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(g() % 8);
        const F2Set a = random_set(g, n, 1 + g() % std::min<std::size_t>(6, std::size_t{1} << n));
        const auto naive = oracle::span(words(a));
        const F2Set s = span(a);
        ASSERT_EQ(s, F2Set(n, std::vector<Word>(naive.begin(), naive.end())));
        ASSERT_TRUE(std::has_single_bit(s.size()));
        ASSERT_EQ(span_size(a), s.size());
    }
}

TEST(Span, CapEnforced) {
    Config cfg;
    cfg.dimension_cap = 3;
    EXPECT_THROW(span(F2Set(5, {1, 2, 4, 8}), cfg), CapExceeded);
}

TEST(RepCount, Examples) {
    const F2Set s = set_of({"00", "01", "10"});
    EXPECT_EQ(rep_count(s, v("00")), 3);
    EXPECT_EQ(rep_count(s, v("11")), 2);
    EXPECT_EQ(rep_count(set_of({"00", "01"}), v("10")), 0);
}

TEST(RepCount, ConvolutionMatchesNaive) {
    std::mt19937_64 g(14);
    Config sparse;
    sparse.dense_cap = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(g() % 8);
        const F2Set s = random_set(g, n, 1 + g() % (std::size_t{1} << n));
        for (const Config& cfg : {Config{}, sparse}) {
            const auto reps = sum_representations(s, cfg);
            long total = 0;
            for (auto [x, count] : reps) {
                ASSERT_EQ(count, oracle::rep(words(s), x));
                ASSERT_EQ(count, rep_count(s, F2Vector(n, x)));
                ASSERT_GT(count, 0);
                total += count;
            }
            ASSERT_EQ(total, static_cast<long>(s.size() * s.size()));
            ASSERT_EQ(reps.size(), sumset(s, s).size());
        }
    }
}

TEST(Wht, Examples) {
    std::vector<std::int64_t> f{1, 0, 0, 0};
    wht(std::span<std::int64_t>(f));
    EXPECT_EQ(f, (std::vector<std::int64_t>{1, 1, 1, 1}));
    std::vector<std::int64_t> g{1, 1, 0, 0};  // indicator of {00,01}
    wht(std::span<std::int64_t>(g));
    EXPECT_EQ(g, (std::vector<std::int64_t>{2, 0, 2, 0}));
    std::vector<std::int64_t> bad(3);
    EXPECT_THROW(wht(std::span<std::int64_t>(bad)), InvalidArgument);
}

TEST(Wht, InvolutionParsevalAndDirectSums) {
    std::mt19937_64 g(15);
    for (int n = 0; n <= 8; ++n) {
        const std::size_t size = std::size_t{1} << n;
        std::vector<std::int64_t> f(size);
        for (auto& x : f) x = static_cast<std::int64_t>(g() % 21) - 10;
        std::vector<std::int64_t> t = f;
        wht(std::span<std::int64_t>(t));
        for (std::size_t x = 0; x < size; ++x) {
            std::int64_t direct = 0;
            for (std::size_t y = 0; y < size; ++y)
                direct += oracle::dot(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), std::max(n, 1)) ? -f[y] : f[y];
            ASSERT_EQ(t[x], direct);
        }
        std::int64_t lhs = 0, rhs = 0;
        for (std::size_t i = 0; i < size; ++i) {
            lhs += t[i] * t[i];
            rhs += f[i] * f[i];
        }
        ASSERT_EQ(lhs, static_cast<std::int64_t>(size) * rhs);
        wht(std::span<std::int64_t>(t));
        for (std::size_t i = 0; i < size; ++i) ASSERT_EQ(t[i], static_cast<std::int64_t>(size) * f[i]);
    }
}

TEST(Spectrum, Examples) {
    const F2Set b = set_of({"00", "01"});
    const SpectrumResult s = spectrum(b, 1);
    EXPECT_EQ(s.members, set_of({"00", "10"}));
    EXPECT_EQ(s.bias(0), 1);
    EXPECT_EQ(s.bias(1), 0);
    EXPECT_EQ(spectrum(b, 0).members, F2Set::full(2));
    std::mt19937_64 g(16);
    for (int trial = 0; trial < 20; ++trial) {
        const F2Set r = random_set(g, 6, 1 + g() % 64);
        EXPECT_TRUE(spectrum(r, 1).contains(0));
    }
    EXPECT_THROW(spectrum(F2Set(3), 1), InvalidArgument);
    EXPECT_THROW(spectrum(b, 2), InvalidArgument);
}

TEST(Spectrum, TransformEqualsDirectEqualsNaive) {
    std::mt19937_64 g(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(g() % 12);
        const F2Set b = random_set(g, n, 1 + g() % std::min<std::size_t>(40, std::size_t{1} << n));
        const Rational alpha = make_rational(static_cast<std::int64_t>(g() % 9), 8);
        const SpectrumResult t = spectrum(b, alpha, {}, SpectrumMethod::Transform);
        const SpectrumResult d = spectrum(b, alpha, {}, SpectrumMethod::Direct);
        ASSERT_EQ(t.members, d.members);
        ASSERT_EQ(t.sums, d.sums);
        if (n <= 8) {
            std::vector<Word> expect;
            for (Word x = 0; x < (Word{1} << n); ++x) {
                const Rational bias(oracle::character(words(b), x, n), static_cast<long>(b.size()));
                ASSERT_EQ(t.bias(x), bias);
                if (rational_abs(bias) >= alpha) expect.push_back(x);
            }
            ASSERT_EQ(t.members, F2Set(n, expect));
        }
    }
}

TEST(Duality, Examples) {
    std::mt19937_64 g(18);
    const F2Set b = random_set(g, 4, 7);
    EXPECT_EQ(duality_measure(F2Set(4, {0}), b), 1);
    EXPECT_EQ(duality_measure(F2Set::full(2), set_of({"01"})), 0);
    EXPECT_EQ(duality_measure(set_of({"01", "10"}), set_of({"11"})), 1);
    EXPECT_THROW(duality_measure(F2Set(2), set_of({"01"})), InvalidArgument);
    EXPECT_THROW(duality_measure(set_of({"01"}), set_of({"011"})), DimensionMismatch);
}

TEST(Duality, MatchesNaiveAndConstantBitCharacterisation) {
    std::mt19937_64 g(19);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(g() % 8);
        const std::size_t cap = std::min<std::size_t>(12, std::size_t{1} << n);
        const F2Set a = random_set(g, n, 1 + g() % cap), b = random_set(g, n, 1 + g() % cap);
        const Rational d = duality_measure(a, b);
        ASSERT_EQ(d, oracle::duality(words(a), words(b), n));
        bool constant = true;
        for (Word x : a)
            for (Word y : b) constant = constant && inner_product(x, y) == inner_product(a[0], b[0]);
        ASSERT_EQ(d == 1, constant);
    }
}

TEST(Duality, HalfSpectrumHoldsAtLeastHalfDualityFraction) {
    std::mt19937_64 g(20);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(g() % 8);
        const std::size_t cap = std::min<std::size_t>(24, std::size_t{1} << n);
        const F2Set a = random_set(g, n, 1 + g() % cap), b = random_set(g, n, 1 + g() % cap);
        const Rational eps = duality_measure(a, b);
        if (eps == 0) continue;
        const F2Set kept = restrict_to_spectrum(a, b, Rational(eps / 2));
        ASSERT_GE(Rational(static_cast<long>(kept.size())), Rational(eps / 2 * static_cast<long>(a.size())));
    }
}

TEST(SetIo, RoundTripAndErrors) {
    std::mt19937_64 g(21);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(g() % 10);
        const F2Set s = random_set(g, n, 1 + g() % std::min<std::size_t>(30, std::size_t{1} << n));
        ASSERT_EQ(parse_set(format_set(s)), s);
    }
    EXPECT_EQ(parse_set("# comment\n\n101\n011\n"), F2Set(3, {5, 3}));
    EXPECT_EQ(parse_set("# n=4\n").dimension(), 4);
    EXPECT_THROW(parse_set("101\n01\n"), ParseError);
    EXPECT_THROW(parse_set("10x\n"), ParseError);
}
