#pragma once

#include "logrank/approxdual/exact_oracle.hpp"

#include <algorithm>
#include <numeric>

namespace logrank {

// Row-growing heuristic. From each of the `seeds` elements of A with the most
// lopsided inner-product profile against B, and each bit, repeatedly add the
// element of A that keeps the largest area; the best rectangle seen wins.
inline DualPair greedy_dual(const F2Set& a, const F2Set& b, std::size_t seeds = 8) {
    a.same_dimension(b);
    if (a.empty() || b.empty()) throw InvalidArgument("greedy_dual on an empty set");
    const std::size_t words = (b.size() + 63) / 64;
    std::vector<detail::Bits> ones(a.size(), detail::Bits(words, 0));
    for (std::size_t s = 0; s < a.size(); ++s)
        for (std::size_t t = 0; t < b.size(); ++t)
            if (inner_product(a[s], b[t])) ones[s][t / 64] |= std::uint64_t{1} << (t % 64);
    detail::Bits all(words, ~std::uint64_t{0});
    if (b.size() % 64) all.back() = (std::uint64_t{1} << (b.size() % 64)) - 1;
    auto neighbours = [&](std::size_t s, int bit) {
        detail::Bits r = ones[s];
        if (bit == 0)
            for (std::size_t w = 0; w < words; ++w) r[w] = ~r[w] & all[w];
        return r;
    };

    std::vector<std::size_t> order(a.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto lopsided = [&](std::size_t s) {
        const std::size_t c = detail::bits_count(ones[s]);
        return std::max(c, b.size() - c);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return lopsided(x) > lopsided(y); });
    order.resize(std::min(seeds, order.size()));

    std::size_t best_area = 0;
    std::vector<std::size_t> best_rows;
    detail::Bits best_cols;
    for (std::size_t seed : order) {
        for (int bit = 0; bit <= 1; ++bit) {
            std::vector<bool> in(a.size(), false);
            std::vector<std::size_t> rows{seed};
            in[seed] = true;
            detail::Bits cols = neighbours(seed, bit);
            while (true) {
                const std::size_t c = detail::bits_count(cols);
                if (c > 0 && rows.size() * c > best_area) {
                    best_area = rows.size() * c;
                    best_rows = rows;
                    best_cols = cols;
                }
                std::size_t pick = a.size(), pick_cols = 0;
                for (std::size_t s = 0; s < a.size(); ++s) {
                    if (in[s]) continue;
                    detail::Bits nb = neighbours(s, bit);
                    std::size_t k = 0;
                    for (std::size_t w = 0; w < words; ++w) k += static_cast<std::size_t>(std::popcount(nb[w] & cols[w]));
                    if (pick == a.size() || k > pick_cols) {
                        pick = s;
                        pick_cols = k;
                    }
                }
                if (pick == a.size() || pick_cols == 0) break;
                in[pick] = true;
                rows.push_back(pick);
                const detail::Bits nb = neighbours(pick, bit);
                for (std::size_t w = 0; w < words; ++w) cols[w] &= nb[w];
            }
        }
    }
    std::vector<Word> xs, ys;
    for (std::size_t s : best_rows) xs.push_back(a[s]);
    for (std::size_t t = 0; t < b.size(); ++t)
        if (detail::bits_test(best_cols, t)) ys.push_back(b[t]);
    return DualPair::make(F2Set(a.dimension(), std::move(xs)), F2Set::from_sorted(a.dimension(), ys));
}

}  // namespace logrank
