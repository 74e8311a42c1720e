#pragma once

#include "logrank/boolmatrix/rank.hpp"
#include "logrank/core/config.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace logrank {

// A submatrix with area >= r^{-3/2}|M| and discrepancy >= r^{-3/2}, where r is
// the real rank of M. `strategy` names the cascade stage that produced it.
struct BiasedSubmatrix {
    SubmatrixView view;
    std::size_t rank = 0;
    std::string strategy;
};

// The exhaustive stage proved that no view meets the contract. This happens on
// small matrices: every non-monochromatic rank-1 matrix, and e.g. the 2x2
// identity, whose size-2 lines are all balanced.
class ContractUnattainable : public NotFound {
public:
    using NotFound::NotFound;
};

namespace detail {

using u128 = UInt128;

// area >= r^{-3/2} total  <=>  area^2 r^3 >= total^2
// |ones - zeros| / area >= r^{-3/2}  <=>  imbalance^2 r^3 >= area^2
struct BiasContract {
    std::size_t total;
    u128 r3;

    bool area_ok(std::size_t area) const {
        return u128(area) * u128(area) * r3 >= u128(total) * u128(total);
    }
    bool bias_ok(std::size_t imbalance, std::size_t area) const {
        return u128(imbalance) * u128(imbalance) * r3 >= u128(area) * u128(area);
    }
    bool holds(std::size_t imbalance, std::size_t area) const { return area_ok(area) && bias_ok(imbalance, area); }
};

struct Candidate {
    SubmatrixView view;
    std::size_t imbalance = 0;
    bool found = false;

    void offer(SubmatrixView v, std::size_t imb) {
        if (!found || imb > imbalance || (imb == imbalance && v.area() > view.area())) {
            view = std::move(v);
            imbalance = imb;
            found = true;
        }
    }
};

// For a fixed row set with per-column contributions (ones minus zeros), the
// best column set of each size m is the top m or the bottom m contributions.
inline void scan_columns(const std::vector<std::size_t>& rows, const std::vector<long>& contrib,
                         const BiasContract& contract, Candidate& out, bool transposed) {
    const std::size_t l = contrib.size();
    std::vector<std::size_t> order(l);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return contrib[a] > contrib[b]; });
    for (int dir = 0; dir < 2; ++dir) {
        long sum = 0;
        for (std::size_t m = 1; m <= l; ++m) {
            const std::size_t j = dir == 0 ? order[m - 1] : order[l - m];
            sum += contrib[j];
            const std::size_t area = rows.size() * m;
            const auto imb = static_cast<std::size_t>(sum < 0 ? -sum : sum);
            if (!contract.holds(imb, area)) continue;
            if (out.found && imb < out.imbalance) continue;
            std::vector<std::size_t> cols;
            for (std::size_t x = 0; x < m; ++x) cols.push_back(dir == 0 ? order[x] : order[l - 1 - x]);
            std::sort(cols.begin(), cols.end());
            SubmatrixView v;
            if (transposed) {
                v.rows = std::move(cols);
                v.cols = rows;
            } else {
                v.rows = rows;
                v.cols = std::move(cols);
            }
            out.offer(std::move(v), imb);
        }
    }
}

inline std::vector<long> column_contributions(const BoolMatrix& m, const std::vector<std::size_t>& rows) {
    std::vector<long> c(m.cols(), 0);
    for (auto i : rows)
        for (std::size_t j = 0; j < m.cols(); ++j) c[j] += m.at(i, j) ? 1 : -1;
    return c;
}

inline std::size_t hamming(const BoolMatrix& m, std::size_t a, std::size_t b) {
    const auto ra = m.row_words(a), rb = m.row_words(b);
    std::size_t d = 0;
    for (std::size_t x = 0; x < ra.size(); ++x) d += static_cast<std::size_t>(std::popcount(ra[x] ^ rb[x]));
    return d;
}

// Row subsets worth trying: everything, singletons, Hamming balls, and the
// sign classes of a power-iteration estimate of the top eigenvector of SS^T,
// S the +-1 version of M.
inline std::vector<std::vector<std::size_t>> row_pool(const BoolMatrix& m) {
    const std::size_t k = m.rows(), l = m.cols();
    std::vector<std::vector<std::size_t>> pool;
    std::vector<std::size_t> all(k);
    std::iota(all.begin(), all.end(), std::size_t{0});
    pool.push_back(all);
    for (std::size_t i = 0; i < k; ++i) pool.push_back({i});
    for (std::size_t radius : {std::size_t{1}, l / 4, l / 3}) {
        if (radius == 0) continue;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<std::size_t> ball;
            for (std::size_t x = 0; x < k; ++x)
                if (hamming(m, i, x) <= radius) ball.push_back(x);
            if (ball.size() > 1) pool.push_back(std::move(ball));
        }
    }
    std::vector<double> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = 1.0 + 1e-3 * static_cast<double>(i % 7);
    std::vector<double> w(l);
    for (int iter = 0; iter < 40; ++iter) {
        std::fill(w.begin(), w.end(), 0.0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < l; ++j) w[j] += (m.at(i, j) ? 1.0 : -1.0) * v[i];
        double norm = 0;
        for (std::size_t i = 0; i < k; ++i) {
            double s = 0;
            for (std::size_t j = 0; j < l; ++j) s += (m.at(i, j) ? 1.0 : -1.0) * w[j];
            v[i] = s;
            norm += s * s;
        }
        norm = std::sqrt(norm);
        if (norm == 0) break;
        for (auto& x : v) x /= norm;
    }
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < k; ++i) (v[i] >= 0 ? pos : neg).push_back(i);
    if (!pos.empty()) pool.push_back(pos);
    if (!neg.empty()) pool.push_back(neg);
    return pool;
}

inline void greedy_stage(const BoolMatrix& m, bool transposed, const BiasContract& contract, Candidate& out) {
    for (const auto& rows : row_pool(m)) scan_columns(rows, column_contributions(m, rows), contract, out, transposed);
}

// Every nonempty row subset, contributions maintained incrementally.
inline void exact_stage(const BoolMatrix& m, bool transposed, const BiasContract& contract, Candidate& out) {
    std::vector<std::size_t> rows;
    std::vector<long> contrib(m.cols(), 0);
    auto rec = [&](auto&& self, std::size_t next) -> void {
        for (std::size_t i = next; i < m.rows(); ++i) {
            rows.push_back(i);
            for (std::size_t j = 0; j < m.cols(); ++j) contrib[j] += m.at(i, j) ? 1 : -1;
            scan_columns(rows, contrib, contract, out, transposed);
            self(self, i + 1);
            for (std::size_t j = 0; j < m.cols(); ++j) contrib[j] -= m.at(i, j) ? 1 : -1;
            rows.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace detail

// Re-checks both inequalities for a view against real rank r.
inline bool meets_bias_contract(const BoolMatrix& m, const SubmatrixView& v, std::size_t r) {
    v.validate(m);
    if (r == 0) return mono_color(m, v).has_value();
    const detail::BiasContract contract{m.area(), detail::u128(r) * r * r};
    const std::size_t ones = count_ones(m, v);
    const std::size_t zeros = v.area() - ones;
    return contract.holds(ones > zeros ? ones - zeros : zeros - ones, v.area());
}

// Cascade: whole matrix, then pooled greedy row sets (both orientations), then
// exhaustive row subsets of the smaller side when it is within exact_cap.
// The result always satisfies meets_bias_contract.
inline BiasedSubmatrix find_biased_submatrix(const BoolMatrix& m, const Config& cfg = {}) {
    BiasedSubmatrix res;
    res.rank = rank_real(m);
    const auto whole = SubmatrixView::whole(m);
    if (meets_bias_contract(m, whole, res.rank)) {
        res.view = whole;
        res.strategy = "whole";
        return res;
    }
    const std::size_t r = res.rank;
    const detail::BiasContract contract{m.area(), detail::u128(r) * r * r};
    const BoolMatrix t = m.transpose();

    detail::Candidate cand;
    detail::greedy_stage(m, false, contract, cand);
    detail::greedy_stage(t, true, contract, cand);
    if (cand.found) {
        res.strategy = "greedy";
    } else {
        const bool use_rows = m.rows() <= m.cols();
        const BoolMatrix& e = use_rows ? m : t;
        if (e.rows() > cfg.exact_cap)
            throw NotFound("find_biased_submatrix: heuristics exhausted and matrix exceeds exact_cap");
        detail::exact_stage(e, !use_rows, contract, cand);
        if (!cand.found)
            throw ContractUnattainable("find_biased_submatrix: no submatrix of this rank-" + std::to_string(r) +
                                       " matrix meets both r^{-3/2} bounds");
        res.strategy = "exact";
    }
    ensure(meets_bias_contract(m, cand.view, r), "biased submatrix fails its contract");
    res.view = std::move(cand.view);
    return res;
}

}  // namespace logrank
