#pragma once

#include "logrank/approxdual/dual_pair.hpp"
#include "logrank/f2core/ops.hpp"

#include <numeric>

namespace logrank {

class GraphEmpty : public NotFound {
public:
    using NotFound::NotFound;
};

struct PullBackResult {
    DualPair pair;
    std::size_t component_size = 0;
    std::int64_t edges = 0;  // ordered pairs (a,a') of A_prev with a+a' in A'_i
};

namespace detail {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) parent_[std::max(x, y)] = std::min(x, y);
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace detail

// Graph on A_prev with {a,a'} an edge iff a+a' is in A'_i. The largest
// component (ties: smallest minimum vertex) and its minimum vertex a fix
// B' = the larger half of B'_i under <a,.>. Neighbours then agree
// (constant bit 0) or disagree (bit 1) on every b in B', so the component,
// or its larger side, is dual to B'.
inline PullBackResult pull_back(const F2Set& a_prev, const DualPair& pair_i, const F2Set& a_i) {
    a_prev.same_dimension(pair_i.a());
    if (!pair_i.a().is_subset_of(a_i)) throw InvalidArgument("pull_back: A'_i is not inside A_i");
    const F2Set& target = pair_i.a();

    detail::DisjointSets dsu(a_prev.size());
    std::int64_t edges = 0;
    for (std::size_t u = 0; u < a_prev.size(); ++u) {
        for (Word x : target) {
            const Word other = a_prev[u] ^ x;
            const auto it = std::lower_bound(a_prev.begin(), a_prev.end(), other);
            if (it == a_prev.end() || *it != other) continue;
            ++edges;
            dsu.unite(u, static_cast<std::size_t>(it - a_prev.begin()));
        }
    }
    if (edges == 0) throw GraphEmpty("pull_back: no pair of A_prev sums into A'_i");

    std::vector<std::size_t> comp_size(a_prev.size(), 0);
    for (std::size_t u = 0; u < a_prev.size(); ++u) ++comp_size[dsu.find(u)];
    // roots are minimum indices, so scanning upward breaks ties toward the smallest vertex
    std::size_t root = 0;
    for (std::size_t u = 0; u < a_prev.size(); ++u)
        if (comp_size[u] > comp_size[root]) root = u;
    std::vector<Word> component;
    for (std::size_t u = 0; u < a_prev.size(); ++u)
        if (dsu.find(u) == root) component.push_back(a_prev[u]);
    const Word anchor = component.front();

    F2Set b0 = pair_i.b().filter([&](Word y) { return inner_product(anchor, y) == 0; });
    F2Set b1 = pair_i.b().filter([&](Word y) { return inner_product(anchor, y) == 1; });
    F2Set b_side = b0.size() >= b1.size() ? std::move(b0) : std::move(b1);

    F2Set a_side = F2Set::from_sorted(a_prev.dimension(), component);
    if (pair_i.constant_bit() == 1) {
        const Word probe = b_side[0];
        F2Set even = a_side.filter([&](Word x) { return inner_product(x, probe) == 0; });
        F2Set odd = a_side.filter([&](Word x) { return inner_product(x, probe) == 1; });
        a_side = even.size() >= odd.size() ? std::move(even) : std::move(odd);
    }
    const std::size_t comp = component.size();
    PullBackResult res{DualPair::make(std::move(a_side), std::move(b_side)), comp, edges};
    ensure(2 * res.pair.b().size() >= pair_i.b().size(), "pull_back: |B'_{i-1}| < |B'_i|/2");
    return res;
}

}  // namespace logrank
