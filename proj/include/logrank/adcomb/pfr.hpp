#pragma once

#include "logrank/f2core/ops.hpp"

#include <bit>
#include <string>

namespace logrank {

enum class PfrStrategy { Exact, Greedy, Auto };

inline std::string to_string(PfrStrategy s) {
    switch (s) {
        case PfrStrategy::Exact: return "exact";
        case PfrStrategy::Greedy: return "greedy";
        case PfrStrategy::Auto: return "auto";
    }
    return "?";
}

// A' subset of A with |span A'| <= |A|. For |A| = 1 the bound is waived
// (the span of a nonzero singleton has size 2) and singleton_waiver is set.
struct PfrResult {
    F2Set subset{1};
    std::uint64_t span_size = 0;
    Rational ratio;
    std::string strategy;
    bool singleton_waiver = false;
    Rational doubling;  // K = |A+A|/|A| of the input
    // |A| / K, the subset size the conjecture predicts for exponent 1
    double reference_floor = 0;
};

namespace detail {

inline std::size_t count_in_span(const F2Set& a, const LinearBasis& basis) {
    std::size_t c = 0;
    for (Word w : a) c += basis.contains(w) ? 1 : 0;
    return c;
}

inline F2Set members_in_span(const F2Set& a, const LinearBasis& basis) {
    return a.filter([&](Word w) { return basis.contains(w); });
}

// Largest d with 2^d <= size.
inline int max_span_rank(std::size_t size) { return static_cast<int>(std::bit_width(size)) - 1; }

struct PfrSearch {
    const F2Set& a;
    int max_rank;
    std::size_t best_count = 0;
    LinearBasis best;

    void dfs(const LinearBasis& basis, std::size_t next) {
        const std::size_t c = count_in_span(a, basis);
        if (c > best_count) {
            best_count = c;
            best = basis;
        }
        if (basis.rank() == max_rank || best_count == a.size()) return;
        // even a full-rank extension cannot exceed 2^max_rank members
        if (best_count >= (std::size_t{1} << max_rank)) return;
        for (std::size_t i = next; i < a.size(); ++i) {
            if (basis.contains(a[i])) continue;
            LinearBasis grown = basis;
            grown.insert(a[i]);
            dfs(grown, i + 1);
        }
    }
};

}  // namespace detail

// Every optimal A' is A intersected with a subspace of dimension
// <= floor(log2 |A|) spanned by members of A; Exact enumerates those
// subspaces, Greedy grows one generator at a time.
inline PfrResult pfr_extract(const F2Set& a, PfrStrategy strategy = PfrStrategy::Auto, const Config& cfg = {}) {
    if (a.empty()) throw InvalidArgument("pfr_extract on an empty set");
    if (strategy == PfrStrategy::Auto) strategy = a.size() <= cfg.exact_cap ? PfrStrategy::Exact : PfrStrategy::Greedy;
    if (strategy == PfrStrategy::Exact && a.size() > cfg.exact_cap)
        throw CapExceeded("exact pfr_extract beyond exact_cap");

    PfrResult res;
    res.strategy = to_string(strategy);
    res.doubling = make_rational(static_cast<std::int64_t>(sumset(a, a, cfg).size()), static_cast<std::int64_t>(a.size()));
    res.reference_floor = static_cast<double>(a.size()) / to_double(res.doubling);

    if (a.size() == 1) {
        res.subset = a;
        res.span_size = span_size(a);
        res.ratio = 1;
        res.singleton_waiver = res.span_size > 1;
        return res;
    }

    const int max_rank = detail::max_span_rank(a.size());
    LinearBasis chosen(a.dimension());
    if (strategy == PfrStrategy::Exact) {
        detail::PfrSearch search{a, max_rank, 0, LinearBasis(a.dimension())};
        search.dfs(LinearBasis(a.dimension()), 0);
        chosen = search.best;
    } else {
        while (chosen.rank() < max_rank) {
            std::size_t best_count = 0;
            Word best_word = 0;
            bool any = false;
            for (Word w : a) {
                if (chosen.contains(w)) continue;
                LinearBasis grown = chosen;
                grown.insert(w);
                const std::size_t c = detail::count_in_span(a, grown);
                if (!any || c > best_count) {
                    best_count = c;
                    best_word = w;
                    any = true;
                }
            }
            if (!any) break;
            chosen.insert(best_word);
        }
    }
    res.subset = detail::members_in_span(a, chosen);
    if (res.subset.empty()) res.subset = F2Set(a.dimension(), {a[0]});
    res.span_size = span_size(res.subset);
    ensure(res.subset.is_subset_of(a), "pfr_extract result escapes A");
    ensure(res.span_size <= a.size(), "pfr_extract result has span larger than |A|");
    res.ratio = make_rational(static_cast<std::int64_t>(res.subset.size()), static_cast<std::int64_t>(a.size()));
    return res;
}

}  // namespace logrank
