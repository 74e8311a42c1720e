#pragma once

#include "logrank/core/config.hpp"
#include "logrank/core/rational.hpp"
#include "logrank/f2core/f2set.hpp"
#include "logrank/f2core/wht.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace logrank {

namespace detail {

inline bool dense_ok(int n, const Config& cfg) { return n <= cfg.dense_cap; }

inline std::size_t table_size(int n) { return std::size_t{1} << n; }

// Dense tables pay off once the pair count outgrows n * 2^n.
inline bool prefer_dense(int n, std::size_t work, const Config& cfg) {
    return dense_ok(n, cfg) && work > table_size(n) / 4;
}

inline std::vector<std::int64_t> indicator(const F2Set& s) {
    std::vector<std::int64_t> t(table_size(s.dimension()), 0);
    for (Word w : s) t[w] = 1;
    return t;
}

}  // namespace detail

// Dense 0/1 table of S over {0, ..., 2^n - 1}.
inline std::vector<std::int64_t> dense_indicator(const F2Set& s, const Config& cfg = {}) {
    if (!detail::dense_ok(s.dimension(), cfg))
        throw CapExceeded("dense table requested above dense_cap");
    return detail::indicator(s);
}

inline F2Set sumset(const F2Set& a, const F2Set& b, const Config& cfg = {}) {
    a.same_dimension(b);
    const int n = a.dimension();
    if (a.empty() || b.empty()) return F2Set(n);
    if (detail::prefer_dense(n, a.size() * b.size(), cfg)) {
        std::vector<bool> hit(detail::table_size(n), false);
        for (Word x : a)
            for (Word y : b) hit[x ^ y] = true;
        std::vector<Word> out;
        for (std::size_t w = 0; w < hit.size(); ++w)
            if (hit[w]) out.push_back(static_cast<Word>(w));
        return F2Set::from_sorted(n, std::move(out));
    }
    std::vector<Word> out;
    out.reserve(a.size() * b.size());
    for (Word x : a)
        for (Word y : b) out.push_back(x ^ y);
    return F2Set(n, std::move(out));
}

// Incremental row-echelon basis over F_2 keyed by leading bit.
class LinearBasis {
public:
    explicit LinearBasis(int n) : n_(n), pivot_(static_cast<std::size_t>(n), 0) {}

    int dimension() const { return n_; }
    int rank() const { return rank_; }

    Word reduce(Word w) const {
        for (int i = n_ - 1; i >= 0; --i)
            if (((w >> i) & 1U) && pivot_[static_cast<std::size_t>(i)] != 0)
                w ^= pivot_[static_cast<std::size_t>(i)];
        return w;
    }

    bool contains(Word w) const { return reduce(w) == 0; }

    // Returns true when w was independent of the current basis.
    bool insert(Word w) {
        w = reduce(w);
        if (w == 0) return false;
        const int lead = 31 - std::countl_zero(w);
        pivot_[static_cast<std::size_t>(lead)] = w;
        ++rank_;
        return true;
    }

    std::vector<Word> vectors() const {
        std::vector<Word> out;
        for (Word p : pivot_)
            if (p != 0) out.push_back(p);
        return out;
    }

private:
    int n_;
    int rank_ = 0;
    std::vector<Word> pivot_;
};

inline LinearBasis basis_of(const F2Set& a) {
    LinearBasis basis(a.dimension());
    for (Word w : a) basis.insert(w);
    return basis;
}

inline int span_rank(const F2Set& a) { return basis_of(a).rank(); }

inline std::uint64_t span_size(const F2Set& a) { return std::uint64_t{1} << span_rank(a); }

// Linear span; the empty set spans {0}.
inline F2Set span(const F2Set& a, const Config& cfg = {}) {
    const auto gens = basis_of(a).vectors();
    if (static_cast<int>(gens.size()) > cfg.dimension_cap)
        throw CapExceeded("span too large to materialise");
    std::vector<Word> out{0};
    out.reserve(std::size_t{1} << gens.size());
    for (Word g : gens) {
        const std::size_t m = out.size();
        for (std::size_t i = 0; i < m; ++i) out.push_back(out[i] ^ g);
    }
    return F2Set(a.dimension(), std::move(out));
}

// Ordered pairs (s, s') in S x S with s + s' = x, (s, s) included.
inline std::int64_t rep_count(const F2Set& s, const F2Vector& x) {
    if (x.dimension() != s.dimension()) throw DimensionMismatch("rep_count dimension mismatch");
    std::int64_t count = 0;
    for (Word w : s)
        if (s.contains(w ^ x.bits())) ++count;
    return count;
}

// Every x with rep_S(x) > 0 together with its count, ascending in x.
inline std::vector<std::pair<Word, std::int64_t>> sum_representations(const F2Set& s,
                                                                      const Config& cfg = {}) {
    const int n = s.dimension();
    std::vector<std::pair<Word, std::int64_t>> out;
    if (s.empty()) return out;
    if (detail::prefer_dense(n, s.size() * s.size(), cfg)) {
        // rep = 1_S * 1_S, evaluated through the transform; exact on integers.
        auto t = detail::indicator(s);
        wht(std::span<std::int64_t>(t));
        for (auto& v : t) v *= v;
        wht(std::span<std::int64_t>(t));
        const auto len = static_cast<std::int64_t>(t.size());
        for (std::size_t x = 0; x < t.size(); ++x)
            if (t[x] != 0) out.emplace_back(static_cast<Word>(x), t[x] / len);
        return out;
    }
    std::vector<Word> sums;
    sums.reserve(s.size() * s.size());
    for (Word a : s)
        for (Word b : s) sums.push_back(a ^ b);
    std::sort(sums.begin(), sums.end());
    for (std::size_t i = 0; i < sums.size();) {
        std::size_t j = i;
        while (j < sums.size() && sums[j] == sums[i]) ++j;
        out.emplace_back(sums[i], static_cast<std::int64_t>(j - i));
        i = j;
    }
    return out;
}

// sum_{b in B} (-1)^<x,b>
inline std::int64_t character_sum(const F2Set& b, Word x) {
    std::int64_t odd = 0;
    for (Word y : b) odd += inner_product(x, y);
    return static_cast<std::int64_t>(b.size()) - 2 * odd;
}

// Full table x -> character_sum(B, x) via the transform of 1_B.
inline std::vector<std::int64_t> character_table(const F2Set& b, const Config& cfg = {}) {
    auto t = dense_indicator(b, cfg);
    wht(std::span<std::int64_t>(t));
    return t;
}

// character_sum(B, p) for each point p, picking the cheaper evaluation route.
inline std::vector<std::int64_t> character_sums(const F2Set& b, std::span<const Word> points,
                                                const Config& cfg = {}) {
    std::vector<std::int64_t> out;
    out.reserve(points.size());
    const int n = b.dimension();
    if (detail::dense_ok(n, cfg) &&
        points.size() * b.size() > detail::table_size(n) * static_cast<std::size_t>(n)) {
        const auto table = character_table(b, cfg);
        for (Word p : points) out.push_back(table[p]);
        return out;
    }
    for (Word p : points) out.push_back(character_sum(b, p));
    return out;
}

// sum_{a in A, b in B} (-1)^<a,b>
inline std::int64_t correlation(const F2Set& a, const F2Set& b, const Config& cfg = {}) {
    a.same_dimension(b);
    std::int64_t total = 0;
    for (std::int64_t c : character_sums(b, a.words(), cfg)) total += c;
    return total;
}

// D(A,B) = |E_{a,b} (-1)^<a,b>| as an exact fraction.
inline Rational duality_measure(const F2Set& a, const F2Set& b, const Config& cfg = {}) {
    a.same_dimension(b);
    if (a.empty() || b.empty()) throw InvalidArgument("duality measure of an empty set");
    const std::int64_t c = correlation(a, b, cfg);
    return make_rational(c < 0 ? -c : c,
                         static_cast<std::int64_t>(a.size()) * static_cast<std::int64_t>(b.size()));
}

}  // namespace logrank
