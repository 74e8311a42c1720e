#pragma once

#include "logrank/boolmatrix/rank.hpp"
#include "logrank/protocol/mono_finders.hpp"

#include <array>
#include <iterator>
#include <numeric>

namespace logrank {

class DepthCapExceeded : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

class DegenerateSplit : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

enum class Speaker { Row, Column };

inline std::string to_string(Speaker s) { return s == Speaker::Row ? "row" : "column"; }

// Measurements taken where the node was split; all in deduplicated coordinates.
struct NodeAnnotation {
    std::size_t area = 0;   // m
    std::size_t rank = 0;   // rank_real of the node matrix
    std::size_t rank_r = 0; // rows(Q) x other columns
    std::size_t rank_s = 0; // other rows x cols(Q)
    std::size_t q_rows = 0;
    std::size_t q_cols = 0;
    Rational delta;         // |Q| / m
    bool forced = false;    // speaker overridden because its bit would be constant

    std::size_t q_area() const { return q_rows * q_cols; }
    friend bool operator==(const NodeAnnotation&, const NodeAnnotation&) = default;
};

// Leaf: output is 0/1. Internal: the speaker sends 1 iff its input lies in
// `split` (original, pre-dedup indices) and play moves to children[bit].
struct ProtocolNode {
    bool leaf = true;
    int output = 0;
    Speaker speaker = Speaker::Row;
    std::vector<std::size_t> split;
    std::array<std::size_t, 2> children{0, 0};
    NodeAnnotation note;
    // leaves also record the block they cover
    std::size_t area = 0;
    std::size_t rank = 0;

    friend bool operator==(const ProtocolNode&, const ProtocolNode&) = default;
};

struct ProtocolTree {
    std::size_t rows = 0;  // original matrix shape
    std::size_t cols = 0;
    std::vector<ProtocolNode> nodes;  // nodes[0] is the root

    const ProtocolNode& root() const { return nodes.front(); }
    std::size_t leaves() const {
        return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const auto& n) { return n.leaf; }));
    }
    std::size_t internal() const { return nodes.size() - leaves(); }
    std::size_t depth() const { return depth_from(0); }
    std::size_t depth_from(std::size_t i) const {
        const ProtocolNode& n = nodes[i];
        return n.leaf ? 0 : 1 + std::max(depth_from(n.children[0]), depth_from(n.children[1]));
    }
    friend bool operator==(const ProtocolTree&, const ProtocolTree&) = default;
};

namespace detail {

inline std::size_t block_rank(const BoolMatrix& m, const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) {
    if (rows.empty() || cols.empty()) return 0;
    return rank_real(m.submatrix(rows, cols));
}

inline std::vector<std::size_t> complement(const std::vector<std::size_t>& all, const std::vector<std::size_t>& part) {
    std::vector<std::size_t> out;
    std::set_difference(all.begin(), all.end(), part.begin(), part.end(), std::back_inserter(out));
    return out;
}

struct ProtocolBuilder {
    const BoolMatrix& m;  // deduplicated source
    const MonoFinder& finder;
    std::size_t depth_cap;
    std::vector<std::vector<std::size_t>> row_copies;  // dedup index -> original indices
    std::vector<std::vector<std::size_t>> col_copies;
    ProtocolTree tree;

    std::vector<std::size_t> originals(const std::vector<std::size_t>& idx,
                                       const std::vector<std::vector<std::size_t>>& copies) const {
        std::vector<std::size_t> out;
        for (auto i : idx) out.insert(out.end(), copies[i].begin(), copies[i].end());
        std::sort(out.begin(), out.end());
        return out;
    }

    std::size_t build(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols, std::size_t depth) {
        if (depth > depth_cap) throw DepthCapExceeded("protocol depth exceeded cap " + std::to_string(depth_cap));
        const std::size_t id = tree.nodes.size();
        tree.nodes.emplace_back();
        const BoolMatrix sub = m.submatrix(rows, cols);
        if (is_monochromatic(sub)) {
            ProtocolNode& leaf = tree.nodes[id];
            leaf.output = sub.at(0, 0) ? 1 : 0;
            leaf.area = sub.area();
            leaf.rank = leaf.output;
            return id;
        }

        // find Q on the deduplicated node matrix, then keep every copy
        const Dedup d = dedup(sub);
        SubmatrixView q = finder(d.matrix);
        q.validate(d.matrix);
        if (q.rows.empty() || q.cols.empty() || !mono_color(d.matrix, q))
            throw InvariantViolation("mono finder returned an empty or non-monochromatic view");
        std::vector<bool> row_on(d.matrix.rows(), false), col_on(d.matrix.cols(), false);
        for (auto i : q.rows) row_on[i] = true;
        for (auto j : q.cols) col_on[j] = true;
        std::vector<std::size_t> q_rows, q_cols;
        for (std::size_t i = 0; i < sub.rows(); ++i)
            if (row_on[d.row_map[i]]) q_rows.push_back(rows[i]);
        for (std::size_t j = 0; j < sub.cols(); ++j)
            if (col_on[d.col_map[j]]) q_cols.push_back(cols[j]);
        const auto rest_rows = complement(rows, q_rows);
        const auto rest_cols = complement(cols, q_cols);

        NodeAnnotation note;
        note.area = sub.area();
        note.rank = rank_real(sub);
        note.rank_r = block_rank(m, q_rows, rest_cols);
        note.rank_s = block_rank(m, rest_rows, q_cols);
        note.q_rows = q_rows.size();
        note.q_cols = q_cols.size();
        note.delta = make_rational(static_cast<std::int64_t>(note.q_area()), static_cast<std::int64_t>(note.area));

        Speaker who = note.rank_r <= note.rank_s ? Speaker::Row : Speaker::Column;
        if (who == Speaker::Row && rest_rows.empty()) {
            who = Speaker::Column;
            note.forced = true;
        } else if (who == Speaker::Column && rest_cols.empty()) {
            who = Speaker::Row;
            note.forced = true;
        }
        if ((who == Speaker::Row && rest_rows.empty()) || (who == Speaker::Column && rest_cols.empty()))
            throw DegenerateSplit("monochromatic rectangle covers a non-monochromatic matrix");

        std::size_t inside, outside;
        if (who == Speaker::Row) {
            outside = build(rest_rows, cols, depth + 1);
            inside = build(q_rows, cols, depth + 1);
        } else {
            outside = build(rows, rest_cols, depth + 1);
            inside = build(rows, q_cols, depth + 1);
        }
        ProtocolNode& node = tree.nodes[id];
        node.leaf = false;
        node.speaker = who;
        node.split = who == Speaker::Row ? originals(q_rows, row_copies) : originals(q_cols, col_copies);
        node.children = {outside, inside};
        node.area = note.area;
        node.rank = note.rank;
        node.note = std::move(note);
        return id;
    }
};

}  // namespace detail

inline std::size_t default_depth_cap(const BoolMatrix& m) { return 4 * (m.rows() + m.cols()); }

// Recursive splitting on a monochromatic rectangle Q: the player whose
// off-diagonal block (R for rows, S for columns) has the smaller real rank
// announces whether its input is in Q's lines.
inline ProtocolTree build_protocol(const BoolMatrix& matrix, const MonoFinder& finder, std::size_t depth_cap = 0) {
    if (depth_cap == 0) depth_cap = default_depth_cap(matrix);
    const Dedup d = dedup(matrix);
    detail::ProtocolBuilder b{d.matrix, finder, depth_cap, {}, {}, {}};
    b.row_copies.resize(d.matrix.rows());
    b.col_copies.resize(d.matrix.cols());
    for (std::size_t i = 0; i < matrix.rows(); ++i) b.row_copies[d.row_map[i]].push_back(i);
    for (std::size_t j = 0; j < matrix.cols(); ++j) b.col_copies[d.col_map[j]].push_back(j);
    b.tree.rows = matrix.rows();
    b.tree.cols = matrix.cols();
    std::vector<std::size_t> rows(d.matrix.rows()), cols(d.matrix.cols());
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    b.build(rows, cols, 0);
    return std::move(b.tree);
}

}  // namespace logrank
