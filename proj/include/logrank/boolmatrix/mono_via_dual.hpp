#pragma once

#include "logrank/approxdual/dual_pair.hpp"
#include "logrank/boolmatrix/biased.hpp"
#include "logrank/boolmatrix/factorize.hpp"

namespace logrank {

// Biased submatrix -> F_2 factorization -> dual pair -> monochromatic view.
// Rows (columns) duplicated inside the biased submatrix all follow their
// representative, so the returned view keeps every copy.
inline SubmatrixView find_mono_via_dual(const BoolMatrix& m, const DualFinder& dual_finder,
                                        const Config& cfg = {}) {
    if (!is_deduplicated(m)) throw InvalidArgument("find_mono_via_dual needs a deduplicated matrix");
    const BiasedSubmatrix biased = find_biased_submatrix(m, cfg);
    const BoolMatrix sub = m.submatrix(biased.view.rows, biased.view.cols);
    const Dedup d = dedup(sub);
    const Factorization f = factorize_f2(d.matrix);
    const DualPair pair = dual_finder(f.a, f.b);
    if (!pair.a().is_subset_of(f.a) || !pair.b().is_subset_of(f.b))
        throw InvariantViolation("dual finder returned sets outside its input");

    const auto keep_rows = f.rows_of(pair.a());
    const auto keep_cols = f.cols_of(pair.b());
    std::vector<bool> row_on(d.matrix.rows(), false), col_on(d.matrix.cols(), false);
    for (auto i : keep_rows) row_on[i] = true;
    for (auto j : keep_cols) col_on[j] = true;

    SubmatrixView out;
    for (std::size_t i = 0; i < sub.rows(); ++i)
        if (row_on[d.row_map[i]]) out.rows.push_back(biased.view.rows[i]);
    for (std::size_t j = 0; j < sub.cols(); ++j)
        if (col_on[d.col_map[j]]) out.cols.push_back(biased.view.cols[j]);
    if (!mono_color(m, out)) throw InvariantViolation("find_mono_via_dual produced a non-monochromatic view");
    return out;
}

}  // namespace logrank
