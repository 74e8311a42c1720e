#pragma once

#include "logrank/boolmatrix/rank.hpp"
#include "logrank/core/config.hpp"
#include "logrank/core/random.hpp"
#include "logrank/f2core/ops.hpp"

#include <bit>

namespace logrank {

// ---- matrices ---------------------------------------------------------------

// M[x][y] = <x,y> over F_2^n, rows and columns in integer order.
inline BoolMatrix ip_matrix(int n, const Config& cfg = {}) {
    check_dimension(n);
    if (n < 1 || n > std::min(cfg.dimension_cap, 12)) throw InvalidArgument("ip matrix needs 1 <= n <= 12");
    const std::size_t size = std::size_t{1} << n;
    BoolMatrix m(size, size);
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < size; ++y) m.set(x, y, inner_product(static_cast<Word>(x), static_cast<Word>(y)));
    return m;
}

inline BoolMatrix from_sets(const F2Set& a, const F2Set& b) {
    a.same_dimension(b);
    if (a.empty() || b.empty()) throw InvalidArgument("from-sets needs nonempty sets");
    BoolMatrix m(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m.set(i, j, inner_product(a[i], b[j]));
    return m;
}

inline void check_shape(std::size_t k, std::size_t l) {
    if (k < 1 || l < 1 || k > 4096 || l > 4096) throw InvalidArgument("matrix shape must lie in 1..4096");
}

// X Y over F_2 with uniform X (k x r) and Y (r x l), redrawn until the
// product has F_2-rank exactly r.
inline BoolMatrix random_f2_rank(std::size_t k, std::size_t l, std::size_t r, Rng& rng) {
    check_shape(k, l);
    if (r > std::min(k, l)) throw InvalidArgument("random-f2-rank: rank exceeds min(k,l)");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::vector<bool>> x(k, std::vector<bool>(r)), y(r, std::vector<bool>(l));
        for (auto& row : x)
            for (std::size_t t = 0; t < r; ++t) row[t] = coin(rng, 1, 2);
        for (auto& row : y)
            for (std::size_t j = 0; j < l; ++j) row[j] = coin(rng, 1, 2);
        BoolMatrix m(k, l);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < l; ++j) {
                bool v = false;
                for (std::size_t t = 0; t < r; ++t) v ^= x[i][t] && y[t][j];
                m.set(i, j, v);
            }
        if (rank_f2(m) == r) return m;
    }
    throw NotFound("random-f2-rank: rejection sampling did not reach the target rank");
}

// Independent entries, each 1 with probability p.
inline BoolMatrix random_dense(std::size_t k, std::size_t l, const Rational& p, Rng& rng) {
    check_shape(k, l);
    if (p < 0 || p > 1) throw InvalidArgument("random-dense: p must lie in [0,1]");
    const auto num = static_cast<std::uint64_t>(numerator(p));
    const auto den = static_cast<std::uint64_t>(denominator(p));
    BoolMatrix m(k, l);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < l; ++j) m.set(i, j, coin(rng, num, den));
    return m;
}

// Real rank exactly r: M = X Y with X uniform 0/1 (k x r) and every column of
// Y holding at most one 1, so each column of M is zero or a column of X.
// Redrawn until rank_real(M) = r.
inline BoolMatrix random_real_rank(std::size_t k, std::size_t l, std::size_t r, Rng& rng) {
    check_shape(k, l);
    if (r > std::min(k, l)) throw InvalidArgument("random-real-rank: rank exceeds min(k,l)");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::vector<bool>> x(k, std::vector<bool>(r));
        for (auto& row : x)
            for (std::size_t t = 0; t < r; ++t) row[t] = coin(rng, 1, 2);
        BoolMatrix m(k, l);
        for (std::size_t j = 0; j < l; ++j) {
            const std::size_t group = uniform_below(rng, r + 1);  // r means a zero column
            if (group == r) continue;
            for (std::size_t i = 0; i < k; ++i) m.set(i, j, x[i][group]);
        }
        if (rank_real(m) == r) return m;
    }
    throw NotFound("random-real-rank: rejection sampling did not reach the target rank");
}

// ---- sets -------------------------------------------------------------------

inline void check_set_dimension(int n, const Config& cfg) {
    if (n < 1 || n > cfg.dimension_cap)
        throw InvalidArgument("dimension must lie in 1.." + std::to_string(cfg.dimension_cap));
}

// All vectors of Hamming weight w.
inline F2Set weight_slice(int n, int w, const Config& cfg = {}) {
    check_set_dimension(n, cfg);
    if (w < 0 || w > n) throw InvalidArgument("weight-slice: weight must lie in 0..n");
    std::vector<Word> words;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        if (std::popcount(x) == w) words.push_back(static_cast<Word>(x));
    return F2Set::from_sorted(n, std::move(words));
}

inline Word random_word(int n, Rng& rng) { return static_cast<Word>(uniform_below(rng, std::uint64_t{1} << n)); }

// Uniform d-dimensional subspace: random vectors added until the rank is d.
inline LinearBasis random_basis(int n, int d, Rng& rng) {
    if (d < 0 || d > n) throw InvalidArgument("subspace dimension must lie in 0..n");
    LinearBasis basis(n);
    while (basis.rank() < d) basis.insert(random_word(n, rng));
    return basis;
}

inline F2Set subspace_of(const LinearBasis& basis, const Config& cfg = {}) {
    std::vector<Word> gens = basis.vectors();
    const int n = basis.dimension();
    return span(F2Set(n, std::move(gens)), cfg);
}

inline F2Set random_subspace(int n, int d, Rng& rng, const Config& cfg = {}) {
    check_set_dimension(n, cfg);
    return subspace_of(random_basis(n, d, rng), cfg);
}

// {y : <v,y> = 0 for all v in V}, enumerated over F_2^n.
inline F2Set annihilator(const F2Set& v, const Config& cfg = {}) {
    const int n = v.dimension();
    if (n > cfg.dense_cap) throw CapExceeded("annihilator: dimension above dense_cap");
    const auto gens = basis_of(v).vectors();
    std::vector<Word> out;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
        bool ok = true;
        for (Word g : gens) ok = ok && inner_product(g, static_cast<Word>(y)) == 0;
        if (ok) out.push_back(static_cast<Word>(y));
    }
    return F2Set::from_sorted(n, std::move(out));
}

// `size` distinct uniform vectors.
inline F2Set random_set(int n, std::size_t size, Rng& rng, const Config& cfg = {}) {
    check_set_dimension(n, cfg);
    if (size > (std::uint64_t{1} << n)) throw InvalidArgument("random set larger than the space");
    if (size > (std::size_t{1} << std::min(n, cfg.dense_cap))) throw CapExceeded("random set above dense_cap");
    std::vector<Word> words;
    std::vector<bool> seen(std::size_t{1} << n, false);
    while (words.size() < size) {
        const Word w = random_word(n, rng);
        if (seen[w]) continue;
        seen[w] = true;
        words.push_back(w);
    }
    return F2Set(n, std::move(words));
}

// A random d-dimensional subspace plus `outliers` random vectors outside it.
inline F2Set subspace_plus_noise(int n, int d, std::size_t outliers, Rng& rng, const Config& cfg = {}) {
    const F2Set v = random_subspace(n, d, rng, cfg);
    if (v.size() + outliers > (std::uint64_t{1} << n)) throw InvalidArgument("subspace-plus-noise: too many outliers");
    std::vector<Word> words(v.begin(), v.end());
    std::vector<bool> seen(std::size_t{1} << n, false);
    for (Word w : v) seen[w] = true;
    std::size_t added = 0;
    while (added < outliers) {
        const Word w = random_word(n, rng);
        if (seen[w]) continue;
        seen[w] = true;
        words.push_back(w);
        ++added;
    }
    return F2Set(n, std::move(words));
}

}  // namespace logrank
