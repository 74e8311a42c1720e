#pragma once

#include "logrank/boolmatrix/bool_matrix.hpp"

#include <cstdint>
#include <vector>

namespace logrank {

// Reduced row-echelon form over F_2: basis rows and their pivot columns.
struct F2Echelon {
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return basis.size(); }
};

inline F2Echelon f2_echelon(const BoolMatrix& m) {
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto w = m.row_words(i);
        rows.emplace_back(w.begin(), w.end());
    }
    F2Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
        const std::size_t word = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t p = r;
        while (p < rows.size() && (rows[p][word] & bit) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || (rows[i][word] & bit) == 0) continue;
            for (std::size_t x = word; x < m.stride(); ++x) rows[i][x] ^= rows[r][x];
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.basis = std::move(rows);
    return out;
}

inline std::size_t rank_f2(const BoolMatrix& m) { return f2_echelon(m).rank(); }

namespace detail {

// Fraction-free (Bareiss) elimination. Every intermediate entry is a minor of
// the input, so the division by the previous pivot is exact.
template <typename Int, typename Wide>
std::size_t bareiss_rank(std::vector<std::vector<Int>> a, std::size_t cols) {
    const std::size_t k = a.size();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < k; ++c) {
        std::size_t p = r;
        while (p < k && a[p][c] == 0) ++p;
        if (p == k) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < k; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                const Wide num = Wide(a[r][c]) * Wide(a[i][j]) - Wide(a[i][c]) * Wide(a[r][j]);
                a[i][j] = static_cast<Int>(num / Wide(prev));
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

template <typename Int>
std::vector<std::vector<Int>> to_integer_rows(const BoolMatrix& m) {
    std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j) ? 1 : 0;
    return a;
}

// Largest order for which the 0/1 minors, (n+1)^((n+1)/2) / 2^n, fit in int64
// and their pairwise products in __int128.
inline constexpr std::size_t kMachineBareissOrder = 36;

}  // namespace detail

// Exact rank over the rationals.
inline std::size_t rank_real(const BoolMatrix& m) {
    if (std::min(m.rows(), m.cols()) <= detail::kMachineBareissOrder) {
        return detail::bareiss_rank<std::int64_t, Int128>(detail::to_integer_rows<std::int64_t>(m),
                                                            m.cols());
    }
    return detail::bareiss_rank<BigInt, BigInt>(detail::to_integer_rows<BigInt>(m), m.cols());
}

inline std::size_t rank_real(const BoolMatrix& m, const SubmatrixView& v) {
    if (v.rows.empty() || v.cols.empty()) return 0;
    return rank_real(m.submatrix(v.rows, v.cols));
}

inline MatrixStats matrix_stats(const BoolMatrix& m) {
    MatrixStats s;
    s.rank_real = rank_real(m);
    s.rank_f2 = rank_f2(m);
    s.area = m.area();
    s.ones = m.count_ones();
    s.zeros = s.area - s.ones;
    s.discrepancy = discrepancy(m);
    return s;
}

}  // namespace logrank
