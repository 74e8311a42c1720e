#pragma once

#include "logrank/boolmatrix/rank.hpp"
#include "logrank/f2core/f2set.hpp"

#include <algorithm>

namespace logrank {

// M_{i,j} = <a_i, b_j> over F_2 with a_i, b_j in F_2^r.
struct Factorization {
    int rank = 0;
    int dimension = 1;  // max(rank, 1); an all-zero matrix factors through F_2^1
    std::vector<Word> row_vectors;
    std::vector<Word> col_vectors;
    F2Set a{1};
    F2Set b{1};

    // Original row indices whose vectors lie in the subset, ascending.
    std::vector<std::size_t> rows_of(const F2Set& subset) const { return indices_of(row_vectors, subset); }
    std::vector<std::size_t> cols_of(const F2Set& subset) const { return indices_of(col_vectors, subset); }

    F2Set row_set(std::span<const std::size_t> idx) const { return pick(row_vectors, idx); }
    F2Set col_set(std::span<const std::size_t> idx) const { return pick(col_vectors, idx); }

private:
    static std::vector<std::size_t> indices_of(const std::vector<Word>& vs, const F2Set& subset) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (subset.contains(vs[i])) out.push_back(i);
        return out;
    }
    F2Set pick(const std::vector<Word>& vs, std::span<const std::size_t> idx) const {
        std::vector<Word> w;
        w.reserve(idx.size());
        for (auto i : idx) w.push_back(vs.at(i));
        return F2Set(dimension, std::move(w));
    }
};

// Row vectors are the coordinates of each row in the reduced echelon basis
// (read off at the pivot columns); column vectors are the basis columns.
inline Factorization factorize_f2(const BoolMatrix& m) {
    if (!is_deduplicated(m)) throw InvalidArgument("factorize_f2 needs a matrix without repeated rows or columns");
    const F2Echelon ech = f2_echelon(m);
    if (ech.rank() > static_cast<std::size_t>(kMaxDimension))
        throw CapExceeded("F_2 rank exceeds the vector width");
    Factorization f;
    f.rank = static_cast<int>(ech.rank());
    f.dimension = std::max(f.rank, 1);
    f.row_vectors.resize(m.rows(), 0);
    f.col_vectors.resize(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t t = 0; t < ech.rank(); ++t)
            if (m.at(i, ech.pivots[t])) f.row_vectors[i] |= Word{1} << t;
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t t = 0; t < ech.rank(); ++t)
            if ((ech.basis[t][j / 64] >> (j % 64)) & 1U) f.col_vectors[j] |= Word{1} << t;
    f.a = F2Set(f.dimension, f.row_vectors);
    f.b = F2Set(f.dimension, f.col_vectors);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            ensure(inner_product(f.row_vectors[i], f.col_vectors[j]) == (m.at(i, j) ? 1 : 0),
                   "factorization does not reproduce the matrix");
    ensure(f.a.size() == m.rows() && f.b.size() == m.cols(), "factor vectors are not distinct");
    return f;
}

}  // namespace logrank
