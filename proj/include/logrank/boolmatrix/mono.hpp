#pragma once

#include "logrank/boolmatrix/bool_matrix.hpp"
#include "logrank/core/config.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

namespace logrank {

// Total order used to pick among equally good rectangles: larger area, then
// lexicographically smaller rows, then columns, then color 0.
inline bool better_rectangle(const SubmatrixView& a, int color_a, const SubmatrixView& b, int color_b) {
    if (a.area() != b.area()) return a.area() > b.area();
    return std::tie(a.rows, a.cols, color_a) < std::tie(b.rows, b.cols, color_b);
}

namespace detail {

struct MonoSearch {
    const BoolMatrix& m;  // enumerated side = rows of m
    bool transposed;
    std::size_t words;
    std::uint64_t tail;
    SubmatrixView best;
    int best_color = -1;
    std::vector<std::vector<std::uint64_t>> stack;  // per depth, [color][word]
    std::vector<std::size_t> chosen;

    static std::size_t popcount(const std::uint64_t* w, std::size_t n) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(w[i]));
        return c;
    }

    void consider(const std::uint64_t* mask, int color) {
        const std::size_t others = popcount(mask, words);
        if (others == 0) return;
        const std::size_t area = others * chosen.size();
        if (best_color >= 0 && area < best.area()) return;
        SubmatrixView v;
        std::vector<std::size_t> forced;
        for (std::size_t x = 0; x < words; ++x)
            for (std::uint64_t w = mask[x]; w != 0; w &= w - 1)
                forced.push_back(x * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        if (transposed) {
            v.rows = std::move(forced);
            v.cols = chosen;
        } else {
            v.rows = chosen;
            v.cols = std::move(forced);
        }
        if (best_color < 0 || better_rectangle(v, color, best, best_color)) {
            best = std::move(v);
            best_color = color;
        }
    }

    // Depth-first over subsets in increasing index order; stack[d] holds the
    // columns constant 0 and constant 1 on the current subset.
    void run() {
        const std::size_t k = m.rows();
        stack.assign(k + 1, std::vector<std::uint64_t>(2 * words, 0));
        for (std::size_t x = 0; x < words; ++x) {
            stack[0][x] = ~std::uint64_t{0};
            stack[0][words + x] = ~std::uint64_t{0};
        }
        stack[0][words - 1] &= tail;
        stack[0][2 * words - 1] &= tail;
        descend(0, 0);
    }

    void descend(std::size_t depth, std::size_t next) {
        for (std::size_t i = next; i < m.rows(); ++i) {
            const auto row = m.row_words(i);
            auto& cur = stack[depth + 1];
            const auto& par = stack[depth];
            bool alive = false;
            for (std::size_t x = 0; x < words; ++x) {
                cur[x] = par[x] & ~row[x];
                cur[words + x] = par[words + x] & row[x];
                alive = alive || cur[x] != 0 || cur[words + x] != 0;
            }
            cur[words - 1] &= tail;
            if (!alive) continue;
            chosen.push_back(i);
            // area bound: every remaining row joins, columns can only shrink
            const std::size_t reach = chosen.size() + (m.rows() - i - 1);
            const std::size_t c0 = popcount(cur.data(), words);
            const std::size_t c1 = popcount(cur.data() + words, words);
            consider(cur.data(), 0);
            consider(cur.data() + words, 1);
            if (best_color < 0 || std::max(c0, c1) * reach >= best.area()) descend(depth + 1, i + 1);
            chosen.pop_back();
        }
    }
};

}  // namespace detail

// Maximum-area monochromatic submatrix by enumerating every subset of the
// smaller side; the other side is forced to the lines constant on the subset.
inline SubmatrixView max_mono_exact(const BoolMatrix& m, const Config& cfg = {}) {
    const bool transposed = m.cols() < m.rows();
    const BoolMatrix t = transposed ? m.transpose() : BoolMatrix(1, 1);
    const BoolMatrix& e = transposed ? t : m;
    if (e.rows() > cfg.exact_cap)
        throw CapExceeded("max_mono_exact: smaller side " + std::to_string(e.rows()) + " exceeds exact_cap " +
                          std::to_string(cfg.exact_cap));
    detail::MonoSearch s{e, transposed, e.stride(), e.tail_mask(), {}, -1, {}, {}};
    s.run();
    ensure(s.best_color >= 0, "max_mono_exact found no rectangle");
    return s.best;
}

// Row-growing heuristic: from every row and color, keep adding the row that
// leaves the most columns constant. Always returns a nonempty rectangle.
inline SubmatrixView greedy_mono(const BoolMatrix& m) {
    const std::size_t words = m.stride();
    const std::uint64_t tail = m.tail_mask();
    auto lines = [&](std::size_t i, int color, std::uint64_t* out) {
        const auto row = m.row_words(i);
        for (std::size_t x = 0; x < words; ++x) out[x] = color ? row[x] : ~row[x];
        out[words - 1] &= tail;
    };
    auto count = [&](const std::vector<std::uint64_t>& w) { return detail::MonoSearch::popcount(w.data(), words); };

    SubmatrixView best;
    int best_color = -1;
    std::vector<std::uint64_t> cols(words), trial(words), line(words);
    for (std::size_t seed = 0; seed < m.rows(); ++seed) {
        for (int color = 0; color <= 1; ++color) {
            lines(seed, color, cols.data());
            if (count(cols) == 0) continue;
            std::vector<bool> in(m.rows(), false);
            std::vector<std::size_t> rows{seed};
            in[seed] = true;
            while (true) {
                SubmatrixView v;
                v.rows = rows;
                std::sort(v.rows.begin(), v.rows.end());
                for (std::size_t x = 0; x < words; ++x)
                    for (std::uint64_t w = cols[x]; w != 0; w &= w - 1)
                        v.cols.push_back(x * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                if (best_color < 0 || better_rectangle(v, color, best, best_color)) {
                    best = std::move(v);
                    best_color = color;
                }
                std::size_t pick = m.rows(), pick_count = 0;
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    if (in[i]) continue;
                    lines(i, color, line.data());
                    for (std::size_t x = 0; x < words; ++x) trial[x] = cols[x] & line[x];
                    const std::size_t c = count(trial);
                    if (c > pick_count) {
                        pick = i;
                        pick_count = c;
                    }
                }
                if (pick == m.rows()) break;
                in[pick] = true;
                rows.push_back(pick);
                lines(pick, color, line.data());
                for (std::size_t x = 0; x < words; ++x) cols[x] &= line[x];
            }
        }
    }
    ensure(best_color >= 0, "greedy_mono found no rectangle");
    return best;
}

}  // namespace logrank
