#pragma once

#include "logrank/core/error.hpp"
#include "logrank/core/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace logrank {

// Dense {0,1} matrix, rows stored as packed 64-bit words.
class BoolMatrix {
public:
    BoolMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {
        if (rows == 0 || cols == 0) throw InvalidArgument("matrix needs at least one row and column");
    }

    static BoolMatrix from_rows(const std::vector<std::vector<int>>& rows) {
        if (rows.empty()) throw InvalidArgument("matrix needs at least one row");
        BoolMatrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw InvalidArgument("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) {
                if (rows[i][j] != 0 && rows[i][j] != 1) throw InvalidArgument("entries must be 0 or 1");
                m.set(i, j, rows[i][j] == 1);
            }
        }
        return m;
    }

    static BoolMatrix from_strings(const std::vector<std::string>& rows) {
        if (rows.empty()) throw InvalidArgument("matrix needs at least one row");
        BoolMatrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw InvalidArgument("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) {
                const char c = rows[i][j];
                if (c != '0' && c != '1') throw InvalidArgument("entries must be 0 or 1");
                m.set(i, j, c == '1');
            }
        }
        return m;
    }

    static BoolMatrix identity(std::size_t n) {
        BoolMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static BoolMatrix constant(std::size_t rows, std::size_t cols, bool value) {
        BoolMatrix m(rows, cols);
        if (value)
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) m.set(i, j, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t area() const { return rows_ * cols_; }
    std::size_t stride() const { return stride_; }

    bool at(std::size_t i, std::size_t j) const {
        return (data_[i * stride_ + j / 64] >> (j % 64)) & 1U;
    }

    void set(std::size_t i, std::size_t j, bool v) {
        auto& w = data_[i * stride_ + j / 64];
        const std::uint64_t bit = std::uint64_t{1} << (j % 64);
        w = v ? (w | bit) : (w & ~bit);
    }

    std::span<const std::uint64_t> row_words(std::size_t i) const {
        return {data_.data() + i * stride_, stride_};
    }

    // Mask of the valid bits in the last word of a row.
    std::uint64_t tail_mask() const {
        const std::size_t r = cols_ % 64;
        return r == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << r) - 1);
    }

    std::size_t count_ones() const {
        std::size_t c = 0;
        for (auto w : data_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    BoolMatrix transpose() const {
        BoolMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j)) t.set(j, i, true);
        return t;
    }

    BoolMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
        BoolMatrix s(rows.size(), cols.size());
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b)
                if (at(rows[a], cols[b])) s.set(a, b, true);
        return s;
    }

    bool rows_equal(std::size_t i, std::size_t k) const {
        return std::equal(data_.begin() + static_cast<std::ptrdiff_t>(i * stride_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * stride_),
                          data_.begin() + static_cast<std::ptrdiff_t>(k * stride_));
    }

    std::string row_string(std::size_t i) const {
        std::string s(cols_, '0');
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j)) s[j] = '1';
        return s;
    }

    friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t stride_;
    std::vector<std::uint64_t> data_;
};

// Row and column index sets into a parent matrix; both sorted, distinct, nonempty.
struct SubmatrixView {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;

    std::size_t area() const { return rows.size() * cols.size(); }

    static SubmatrixView whole(const BoolMatrix& m) {
        SubmatrixView v;
        for (std::size_t i = 0; i < m.rows(); ++i) v.rows.push_back(i);
        for (std::size_t j = 0; j < m.cols(); ++j) v.cols.push_back(j);
        return v;
    }

    void validate(const BoolMatrix& m) const {
        auto ok = [](const std::vector<std::size_t>& idx, std::size_t bound) {
            if (idx.empty()) return false;
            for (std::size_t i = 0; i < idx.size(); ++i) {
                if (idx[i] >= bound) return false;
                if (i > 0 && idx[i] <= idx[i - 1]) return false;
            }
            return true;
        };
        if (!ok(rows, m.rows()) || !ok(cols, m.cols()))
            throw InvalidArgument("submatrix index sets must be nonempty, sorted, distinct and in range");
    }

    friend bool operator==(const SubmatrixView&, const SubmatrixView&) = default;
};

inline std::size_t count_ones(const BoolMatrix& m, const SubmatrixView& v) {
    std::size_t c = 0;
    for (auto i : v.rows)
        for (auto j : v.cols) c += m.at(i, j) ? 1 : 0;
    return c;
}

// delta = ||M_0| - |M_1|| / |M|
inline Rational discrepancy(const BoolMatrix& m, const SubmatrixView& v) {
    if (v.rows.empty() || v.cols.empty()) throw InvalidArgument("discrepancy of an empty view");
    const auto ones = static_cast<std::int64_t>(count_ones(m, v));
    const auto area = static_cast<std::int64_t>(v.area());
    const std::int64_t diff = area - 2 * ones;
    return make_rational(diff < 0 ? -diff : diff, area);
}

inline Rational discrepancy(const BoolMatrix& m) {
    const auto ones = static_cast<std::int64_t>(m.count_ones());
    const auto area = static_cast<std::int64_t>(m.area());
    const std::int64_t diff = area - 2 * ones;
    return make_rational(diff < 0 ? -diff : diff, area);
}

// Common value of a monochromatic view, nullopt otherwise.
inline std::optional<int> mono_color(const BoolMatrix& m, const SubmatrixView& v) {
    if (v.rows.empty() || v.cols.empty()) return std::nullopt;
    const bool first = m.at(v.rows.front(), v.cols.front());
    for (auto i : v.rows)
        for (auto j : v.cols)
            if (m.at(i, j) != first) return std::nullopt;
    return first ? 1 : 0;
}

inline bool is_monochromatic(const BoolMatrix& m) {
    return mono_color(m, SubmatrixView::whole(m)).has_value();
}

struct MatrixStats {
    std::size_t rank_real = 0;
    std::size_t rank_f2 = 0;
    std::size_t area = 0;
    std::size_t zeros = 0;
    std::size_t ones = 0;
    Rational discrepancy;
};

// Pairwise-distinct rows and columns; maps send every original index to its
// representative, reps list the first original index of each survivor.
struct Dedup {
    BoolMatrix matrix;
    std::vector<std::size_t> row_map;
    std::vector<std::size_t> col_map;
    std::vector<std::size_t> row_reps;
    std::vector<std::size_t> col_reps;
};

namespace detail {

inline void dedup_rows(const BoolMatrix& m, std::vector<std::size_t>& map, std::vector<std::size_t>& reps) {
    map.assign(m.rows(), 0);
    reps.clear();
    std::vector<std::size_t> order(m.rows());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto less = [&](std::size_t a, std::size_t b) {
        const auto ra = m.row_words(a), rb = m.row_words(b);
        if (std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end())) return true;
        if (std::lexicographical_compare(rb.begin(), rb.end(), ra.begin(), ra.end())) return false;
        return a < b;
    };
    std::sort(order.begin(), order.end(), less);
    // first occurrence of each distinct row, in original order
    std::vector<std::size_t> group_first(m.rows());
    for (std::size_t p = 0; p < order.size();) {
        std::size_t q = p;
        while (q < order.size() && m.rows_equal(order[p], order[q])) ++q;
        for (std::size_t x = p; x < q; ++x) group_first[order[x]] = order[p];
        p = q;
    }
    std::vector<std::size_t> slot(m.rows(), SIZE_MAX);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const std::size_t f = group_first[i];
        if (slot[f] == SIZE_MAX) {
            slot[f] = reps.size();
            reps.push_back(f);
        }
        map[i] = slot[f];
    }
}

}  // namespace detail

// Drops duplicate rows, then duplicate columns, keeping first occurrences.
inline Dedup dedup(const BoolMatrix& m) {
    std::vector<std::size_t> row_map, row_reps, col_map, col_reps;
    detail::dedup_rows(m, row_map, row_reps);
    std::vector<std::size_t> all_cols(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) all_cols[j] = j;
    const BoolMatrix rows_done = m.submatrix(row_reps, all_cols);
    const BoolMatrix t = rows_done.transpose();
    detail::dedup_rows(t, col_map, col_reps);
    std::vector<std::size_t> all_rows(rows_done.rows());
    for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
    BoolMatrix compressed = rows_done.submatrix(all_rows, col_reps);
    return Dedup{std::move(compressed), std::move(row_map), std::move(col_map), std::move(row_reps),
                 std::move(col_reps)};
}

inline bool is_deduplicated(const BoolMatrix& m) {
    const Dedup d = dedup(m);
    return d.matrix.rows() == m.rows() && d.matrix.cols() == m.cols();
}

}  // namespace logrank
