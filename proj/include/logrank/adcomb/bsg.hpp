#pragma once

#include "logrank/core/random.hpp"
#include "logrank/f2core/ops.hpp"

#include <numeric>

namespace logrank {

class DensityTooLow : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

struct BsgResult {
    F2Set subset{1};
    Rational ratio_in;        // |A'| / |A|
    Rational doubling_out;    // |A'+A'| / |A|
    Rational self_doubling;   // |A'+A'| / |A'|
    Rational density;         // Pr_{a,a'}[a+a' in S], measured
    Rational k_param;         // 1 / rho
    Rational c_param;         // |S| / |A|
    std::size_t size_floor = 0;
    std::size_t candidates = 0;
};

namespace detail {

class Membership {
public:
    Membership(const F2Set& s, const Config& cfg) : set_(&s) {
        if (dense_ok(s.dimension(), cfg)) {
            bits_.assign(table_size(s.dimension()), false);
            for (Word w : s) bits_[w] = true;
        }
    }
    bool operator()(Word w) const { return bits_.empty() ? set_->contains(w) : bool(bits_[w]); }

private:
    const F2Set* set_;
    std::vector<bool> bits_;
};

// Ordered pairs (a,a') in A x A with a + a' in S.
inline std::int64_t pairs_landing_in(const F2Set& a, const F2Set& s, const Config& cfg) {
    std::int64_t count = 0;
    if (s.size() < a.size()) {
        const Membership in_a(a, cfg);
        for (Word x : a)
            for (Word y : s) count += in_a(x ^ y) ? 1 : 0;
    } else {
        const Membership in_s(s, cfg);
        for (Word x : a)
            for (Word y : a) count += in_s(x ^ y) ? 1 : 0;
    }
    return count;
}

}  // namespace detail

inline Rational sum_density(const F2Set& a, const F2Set& s, const Config& cfg = {}) {
    a.same_dimension(s);
    if (a.empty()) throw InvalidArgument("density over an empty set");
    const auto n = static_cast<std::int64_t>(a.size());
    return make_rational(detail::pairs_landing_in(a, s, cfg), n * n);
}

// Graph on A with an edge {a,a'} whenever a+a' lies in S. Seeded pivots each
// contribute their neighbourhood, pruned at several codegree levels; the
// candidate of smallest |A'+A'|/|A'| among those of size >= rho^2|A|/8 wins
// (ties: larger, then canonically smaller). A itself is always a candidate.
inline BsgResult bsg_extract(const F2Set& a, const F2Set& s, const Rational& rho, std::uint64_t seed,
                             const Config& cfg = {}, std::size_t max_pivots = 16) {
    a.same_dimension(s);
    if (a.empty()) throw InvalidArgument("bsg_extract on an empty set");
    if (rho <= 0 || rho > 1) throw InvalidArgument("bsg_extract density parameter must lie in (0,1]");
    BsgResult res;
    res.density = sum_density(a, s, cfg);
    if (res.density < rho)
        throw DensityTooLow("bsg_extract: measured density " + to_string(res.density) + " below " + to_string(rho));
    const auto a_size = static_cast<std::int64_t>(a.size());
    res.k_param = Rational(1) / rho;
    res.c_param = make_rational(static_cast<std::int64_t>(s.size()), a_size);
    res.size_floor = static_cast<std::size_t>(ceil_times(rho * rho / 8, a_size));
    res.size_floor = std::max<std::size_t>(res.size_floor, 1);

    const detail::Membership in_s(s, cfg);
    const detail::Membership in_a(a, cfg);

    F2Set best = a;
    std::size_t best_sum = sumset(a, a, cfg).size();
    auto offer = [&](F2Set cand) {
        ++res.candidates;
        if (cand.size() < res.size_floor) return;
        const std::size_t sum = sumset(cand, cand, cfg).size();
        // sum/|cand| < best_sum/|best|
        const auto lhs = static_cast<UInt128>(sum) * best.size();
        const auto rhs = static_cast<UInt128>(best_sum) * cand.size();
        const bool better = lhs < rhs ||
                            (lhs == rhs && (cand.size() > best.size() ||
                                            (cand.size() == best.size() &&
                                             std::lexicographical_compare(cand.begin(), cand.end(), best.begin(),
                                                                          best.end()))));
        if (better) {
            best = std::move(cand);
            best_sum = sum;
        }
    };

    std::vector<std::size_t> pivots(a.size());
    std::iota(pivots.begin(), pivots.end(), std::size_t{0});
    Rng rng(seed);
    const std::size_t trials = std::min(max_pivots, pivots.size());
    for (std::size_t i = 0; i < trials; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, pivots.size() - i));
        std::swap(pivots[i], pivots[j]);
    }
    pivots.resize(trials);
    std::sort(pivots.begin(), pivots.end());

    for (std::size_t p : pivots) {
        const Word pivot = a[p];
        std::vector<Word> nbhd;
        if (s.size() < a.size()) {
            for (Word y : s)
                if (in_a(pivot ^ y)) nbhd.push_back(pivot ^ y);
            std::sort(nbhd.begin(), nbhd.end());
        } else {
            for (Word x : a)
                if (in_s(pivot ^ x)) nbhd.push_back(x);
        }
        if (nbhd.empty()) continue;
        std::vector<std::int64_t> codeg(nbhd.size(), 0);
        for (std::size_t u = 0; u < nbhd.size(); ++u)
            for (std::size_t v = 0; v < nbhd.size(); ++v) codeg[u] += in_s(nbhd[u] ^ nbhd[v]) ? 1 : 0;
        const auto deg = static_cast<std::int64_t>(nbhd.size());
        offer(F2Set::from_sorted(a.dimension(), nbhd));
        const std::vector<Rational> levels{Rational(rho / 2), rho, Rational((1 + rho) / 2)};
        for (const Rational& level : levels) {
            const std::int64_t need = ceil_times(level, deg);
            std::vector<Word> kept;
            for (std::size_t u = 0; u < nbhd.size(); ++u)
                if (codeg[u] >= need) kept.push_back(nbhd[u]);
            if (!kept.empty() && kept.size() < nbhd.size()) offer(F2Set::from_sorted(a.dimension(), std::move(kept)));
        }
    }

    ensure(best.is_subset_of(a), "bsg_extract result escapes A");
    res.subset = std::move(best);
    res.ratio_in = make_rational(static_cast<std::int64_t>(res.subset.size()), a_size);
    res.doubling_out = make_rational(static_cast<std::int64_t>(best_sum), a_size);
    res.self_doubling = make_rational(static_cast<std::int64_t>(best_sum), static_cast<std::int64_t>(res.subset.size()));
    return res;
}

}  // namespace logrank
