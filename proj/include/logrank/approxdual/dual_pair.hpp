#pragma once

#include "logrank/f2core/f2set.hpp"

#include <functional>

namespace logrank {

// Subsets A', B' with <a,b> equal to constant_bit on all of A' x B', i.e.
// D(A',B') = 1. Only constructible through make(), which checks every pair.
class DualPair {
public:
    static DualPair make(F2Set a, F2Set b) {
        a.same_dimension(b);
        if (a.empty() || b.empty()) throw InvalidArgument("dual pair sides must be nonempty");
        const int bit = inner_product(a[0], b[0]);
        for (Word x : a)
            for (Word y : b)
                if (inner_product(x, y) != bit)
                    throw InvariantViolation("dual pair is not constant: <" + F2Vector(a.dimension(), x).str() +
                                             "," + F2Vector(a.dimension(), y).str() + "> differs");
        return DualPair(std::move(a), std::move(b), bit);
    }

    const F2Set& a() const { return a_; }
    const F2Set& b() const { return b_; }
    int constant_bit() const { return bit_; }
    std::size_t area() const { return a_.size() * b_.size(); }

    friend bool operator==(const DualPair&, const DualPair&) = default;

private:
    DualPair(F2Set a, F2Set b, int bit) : a_(std::move(a)), b_(std::move(b)), bit_(bit) {}

    F2Set a_;
    F2Set b_;
    int bit_;
};

// Strategy hook: given (A,B) with D(A,B) > 0 return a dual pair inside them.
using DualFinder = std::function<DualPair(const F2Set&, const F2Set&)>;

}  // namespace logrank
