#pragma once

#include "logrank/approxdual/dual_pair.hpp"
#include "logrank/core/config.hpp"

#include <bit>
#include <tuple>

namespace logrank {

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline std::size_t bits_count(const Bits& b) {
    std::size_t c = 0;
    for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

inline bool bits_test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }

inline bool bits_subset(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

// Close-by-One over the relation rel[s] = {t : <s,t> = bit}, s ranging over
// the enumerated side. Every maximum-area pair with nonempty sides is a
// closed pair (extent = everything adjacent to the whole intent), so
// enumerating closed pairs loses nothing. Branches whose area bound falls
// strictly below the incumbent are cut; equal bounds survive so the tie
// order stays exact.
struct ClosedPairSearch {
    const std::vector<Bits>& rel;  // per enumerated element, its neighbours
    std::size_t side;              // enumerated side size
    std::size_t other_words;
    std::function<void(const Bits&, const Bits&)> report;
    std::size_t incumbent = 0;

    Bits closure(const Bits& intent) const {
        Bits extent((side + 63) / 64, 0);
        for (std::size_t s = 0; s < side; ++s)
            if (bits_subset(intent, rel[s])) extent[s / 64] |= std::uint64_t{1} << (s % 64);
        return extent;
    }

    void run(const Bits& extent, const Bits& intent, std::size_t next) {
        const std::size_t intent_size = bits_count(intent);
        if (intent_size == 0) return;
        if (bits_count(extent) > 0) report(extent, intent);
        for (std::size_t s = next; s < side; ++s) {
            if (bits_test(extent, s)) continue;
            std::size_t reachable = bits_count(extent);
            for (std::size_t u = s; u < side; ++u)
                if (!bits_test(extent, u)) ++reachable;
            if (reachable * intent_size < incumbent) return;
            Bits narrowed(other_words);
            for (std::size_t w = 0; w < other_words; ++w) narrowed[w] = intent[w] & rel[s][w];
            if (bits_count(narrowed) == 0) continue;
            Bits grown = closure(narrowed);
            // canonicity: the closure must not add anything below s
            bool canonical = true;
            for (std::size_t u = 0; u < s && canonical; ++u)
                if (bits_test(grown, u) && !bits_test(extent, u)) canonical = false;
            if (canonical) run(grown, narrowed, s + 1);
        }
    }
};

}  // namespace detail

// Maximum-area dual pair by exhaustive search over the smaller side. Ties:
// lexicographically smaller A', then smaller B', then constant bit 0.
inline DualPair exact_dual_oracle(const F2Set& a, const F2Set& b, const Config& cfg = {}) {
    a.same_dimension(b);
    if (a.empty() || b.empty()) throw InvalidArgument("exact_dual_oracle on an empty set");
    const bool swap = b.size() < a.size();
    const F2Set& enumerated = swap ? b : a;
    const F2Set& other = swap ? a : b;
    if (enumerated.size() > cfg.exact_cap)
        throw CapExceeded("exact_dual_oracle: smaller side has " + std::to_string(enumerated.size()) +
                          " elements, cap is " + std::to_string(cfg.exact_cap));

    const std::size_t words = (other.size() + 63) / 64;
    std::size_t best_area = 0;
    std::vector<Word> best_a, best_b;
    int best_bit = -1;

    for (int bit = 0; bit <= 1; ++bit) {
        std::vector<detail::Bits> rel(enumerated.size(), detail::Bits(words, 0));
        for (std::size_t s = 0; s < enumerated.size(); ++s)
            for (std::size_t t = 0; t < other.size(); ++t)
                if (inner_product(enumerated[s], other[t]) == bit) rel[s][t / 64] |= std::uint64_t{1} << (t % 64);

        detail::ClosedPairSearch search{rel, enumerated.size(), words, {}, best_area};
        search.report = [&](const detail::Bits& extent, const detail::Bits& intent) {
            const std::size_t area = detail::bits_count(extent) * detail::bits_count(intent);
            if (area < best_area) return;
            std::vector<Word> xs, ys;
            for (std::size_t s = 0; s < enumerated.size(); ++s)
                if (detail::bits_test(extent, s)) xs.push_back(enumerated[s]);
            for (std::size_t t = 0; t < other.size(); ++t)
                if (detail::bits_test(intent, t)) ys.push_back(other[t]);
            if (swap) std::swap(xs, ys);
            const bool better = area > best_area || best_bit < 0 ||
                                std::tie(xs, ys, bit) < std::tie(best_a, best_b, best_bit);
            if (better) {
                best_area = area;
                best_a = std::move(xs);
                best_b = std::move(ys);
                best_bit = bit;
                search.incumbent = best_area;
            }
        };
        detail::Bits all(words, ~std::uint64_t{0});
        if (other.size() % 64) all.back() = (std::uint64_t{1} << (other.size() % 64)) - 1;
        search.run(search.closure(all), all, 0);
    }
    return DualPair::make(F2Set::from_sorted(a.dimension(), best_a), F2Set::from_sorted(a.dimension(), best_b));
}

}  // namespace logrank
