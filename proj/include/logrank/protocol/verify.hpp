#pragma once

#include "logrank/protocol/tree.hpp"

#include <cmath>

namespace logrank {

class Mismatch : public InvariantViolation {
public:
    Mismatch(std::size_t x, std::size_t y)
        : InvariantViolation("protocol disagrees with the matrix at (" + std::to_string(x) + "," + std::to_string(y) + ")"),
          x_(x), y_(y) {}
    std::size_t x() const { return x_; }
    std::size_t y() const { return y_; }

private:
    std::size_t x_, y_;
};

class AuditViolation : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

struct SimulationResult {
    int output = 0;
    std::size_t bits = 0;
};

inline SimulationResult simulate(const ProtocolTree& tree, std::size_t x, std::size_t y) {
    if (x >= tree.rows || y >= tree.cols)
        throw InvalidArgument("simulate: input (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
    SimulationResult res;
    std::size_t at = 0;
    while (!tree.nodes[at].leaf) {
        const ProtocolNode& n = tree.nodes[at];
        const std::size_t input = n.speaker == Speaker::Row ? x : y;
        const bool bit = std::binary_search(n.split.begin(), n.split.end(), input);
        at = n.children[bit ? 1 : 0];
        ++res.bits;
    }
    res.output = tree.nodes[at].output;
    return res;
}

namespace detail {

// log2 of binom(a, b) for real a >= b >= 0
inline double log2_binomial(double a, double b) {
    if (b <= 0 || a <= b) return 0;
    return (std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1)) / std::log(2.0);
}

}  // namespace detail

struct CostReport {
    std::size_t entries = 0;  // k * l of the input
    std::size_t m = 0;        // area after deduplication
    std::size_t r = 0;        // rank_real
    std::size_t leaves = 0;
    std::size_t depth = 0;
    std::size_t internal = 0;
    std::size_t max_bits = 0;  // longest simulated transcript
    double log2_rank = 0;
    double log2_leaves = 0;
    double rank_over_log_rank = 0;  // r / log2 r, taken as r when r <= 2
    double log2_binomial_bound = 0; // log2 binom(log m + log r, log r)
    bool block_inequality = true;   // rank(R) + rank(S) <= rank + 1 at every node
    bool leaves_cover_rank = true;  // L >= r - 1
    bool leaves_within_area = true; // L <= 2m
};

// Simulates every input pair against the matrix and fills the cost figures.
inline CostReport verify(const ProtocolTree& tree, const BoolMatrix& m) {
    if (tree.rows != m.rows() || tree.cols != m.cols()) throw DimensionMismatch("verify: tree and matrix shapes differ");
    CostReport rep;
    rep.entries = m.area();
    for (std::size_t x = 0; x < m.rows(); ++x)
        for (std::size_t y = 0; y < m.cols(); ++y) {
            const SimulationResult s = simulate(tree, x, y);
            if (s.output != (m.at(x, y) ? 1 : 0)) throw Mismatch(x, y);
            rep.max_bits = std::max(rep.max_bits, s.bits);
        }
    rep.m = tree.root().area;
    rep.r = rank_real(m);
    rep.leaves = tree.leaves();
    rep.depth = tree.depth();
    rep.internal = tree.internal();
    ensure(rep.max_bits == rep.depth, "deepest transcript differs from tree depth");
    for (const auto& n : tree.nodes)
        if (!n.leaf && n.note.rank_r + n.note.rank_s > n.note.rank + 1) rep.block_inequality = false;
    rep.leaves_cover_rank = rep.leaves + 1 >= rep.r;
    rep.leaves_within_area = rep.leaves <= 2 * rep.m;
    ensure(rep.block_inequality, "block-rank inequality rank(R)+rank(S) <= rank+1 failed");
    ensure(rep.leaves_cover_rank, "fewer leaves than rank_real - 1");
    ensure(rep.leaves_within_area, "more leaves than twice the area");
    const double r = static_cast<double>(rep.r);
    rep.log2_rank = rep.r > 0 ? std::log2(r) : 0;
    rep.log2_leaves = std::log2(static_cast<double>(rep.leaves));
    rep.rank_over_log_rank = rep.r <= 2 ? r : r / std::log2(r);
    const double lm = std::log2(static_cast<double>(rep.m));
    rep.log2_binomial_bound = detail::log2_binomial(lm + rep.log2_rank, rep.log2_rank);
    return rep;
}

struct NodeAudit {
    std::string path;  // "" for the root, then one character per edge taken
    std::size_t area = 0;
    std::size_t rank = 0;
    Rational delta;
    Speaker speaker = Speaker::Row;
    bool forced = false;
    std::size_t rank_r = 0;
    std::size_t rank_s = 0;
    std::size_t inside_area = 0;   // child containing Q
    std::size_t inside_rank = 0;
    std::size_t outside_area = 0;
    std::size_t outside_rank = 0;
    bool block_inequality = true;
    bool area_decreases = true;      // both children smaller, outside <= m - |Q|
    bool inside_rank_by_block = true; // inside rank <= rank of the speaker's block + 1
    bool inside_rank_halves = true;  // inside rank <= (rank + 1) / 2 + 1
};

struct AuditRecord {
    std::vector<NodeAudit> nodes;
    std::size_t m = 0;
    std::size_t r = 0;
    std::size_t leaves = 0;
    double log2_leaves = 0;
    double rank_over_log_rank = 0;
    double log2_binomial_bound = 0;
    bool area_in_range = true;  // r <= m <= 2^{2r}
};

// Per-node check of the recursion L(m,r) <= L(m,r/2) + L(m(1-delta),r):
// area strictly decreases on both edges and the block inequality holds.
// Rank bounds on the Q-side child are recorded, not enforced.
inline AuditRecord leaf_recurrence_audit(const ProtocolTree& tree) {
    AuditRecord rec;
    std::vector<std::pair<std::size_t, std::string>> todo{{0, ""}};
    while (!todo.empty()) {
        auto [id, path] = todo.back();
        todo.pop_back();
        const ProtocolNode& n = tree.nodes[id];
        if (n.leaf) continue;
        const ProtocolNode& out = tree.nodes[n.children[0]];
        const ProtocolNode& in = tree.nodes[n.children[1]];
        NodeAudit a;
        a.path = path;
        a.area = n.note.area;
        a.rank = n.note.rank;
        a.delta = n.note.delta;
        a.speaker = n.speaker;
        a.forced = n.note.forced;
        a.rank_r = n.note.rank_r;
        a.rank_s = n.note.rank_s;
        a.inside_area = in.area;
        a.inside_rank = in.rank;
        a.outside_area = out.area;
        a.outside_rank = out.rank;
        a.block_inequality = a.rank_r + a.rank_s <= a.rank + 1;
        a.area_decreases = in.area < a.area && out.area < a.area && out.area + n.note.q_area() <= a.area;
        const std::size_t own_block = n.speaker == Speaker::Row ? a.rank_r : a.rank_s;
        a.inside_rank_by_block = a.inside_rank <= own_block + 1;
        a.inside_rank_halves = 2 * a.inside_rank <= a.rank + 3;
        if (!a.block_inequality) throw AuditViolation("block-rank inequality fails at node '" + path + "'");
        if (!a.area_decreases) throw AuditViolation("area does not decrease at node '" + path + "'");
        rec.nodes.push_back(std::move(a));
        todo.emplace_back(n.children[1], path + "1");
        todo.emplace_back(n.children[0], path + "0");
    }
    rec.m = tree.root().area;
    rec.r = tree.root().rank;
    rec.leaves = tree.leaves();
    const double r = static_cast<double>(rec.r);
    const double log_r = rec.r > 0 ? std::log2(r) : 0;
    rec.log2_leaves = std::log2(static_cast<double>(rec.leaves));
    rec.rank_over_log_rank = rec.r <= 2 ? r : r / log_r;
    rec.log2_binomial_bound = detail::log2_binomial(std::log2(static_cast<double>(rec.m)) + log_r, log_r);
    rec.area_in_range = rec.r <= rec.m && (2 * rec.r >= 64 || rec.m <= (std::size_t{1} << (2 * rec.r)));
    return rec;
}

}  // namespace logrank
