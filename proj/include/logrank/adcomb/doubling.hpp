#pragma once

#include "logrank/f2core/ops.hpp"

#include <cmath>

namespace logrank {

// Doubling constant of A against the classical span bounds. Bounds are kept
// as log2 values; K^2 2^{K^4} overflows a double already for K around 6.
struct DoublingReport {
    std::size_t size = 0;
    std::size_t sumset_size = 0;
    std::uint64_t span_size = 0;
    Rational doubling;    // K = |A+A| / |A|
    Rational span_ratio;  // |span A| / |A|
    double log2_freiman_bound = 0;    // log2(K^2 2^{K^4})
    double log2_green_tao_bound = 0;  // log2(2^{2K})
    double log2_sanders_subset = 0;   // log2(K^{-(log2 K)^3} |A|)
    bool within_freiman = false;
    bool within_green_tao = false;
    bool affine_subspace = false;  // |A+A| = |A|
    bool linear_subspace = false;  // A+A = A
};

inline DoublingReport doubling_report(const F2Set& a, const Config& cfg = {}) {
    if (a.empty()) throw InvalidArgument("doubling_report on an empty set");
    DoublingReport r;
    const F2Set sum = sumset(a, a, cfg);
    r.size = a.size();
    r.sumset_size = sum.size();
    r.span_size = span_size(a);
    const auto size = static_cast<std::int64_t>(a.size());
    r.doubling = make_rational(static_cast<std::int64_t>(r.sumset_size), size);
    r.span_ratio = make_rational(static_cast<std::int64_t>(r.span_size), size);
    const double k = to_double(r.doubling);
    const double log2k = std::log2(k);
    r.log2_freiman_bound = 2 * log2k + k * k * k * k;
    r.log2_green_tao_bound = 2 * k;
    r.log2_sanders_subset = std::log2(static_cast<double>(a.size())) - log2k * log2k * log2k * log2k;
    const double log2_span_ratio = to_double(r.span_ratio) > 0 ? std::log2(to_double(r.span_ratio)) : 0;
    r.within_freiman = log2_span_ratio <= r.log2_freiman_bound + 1e-12;
    r.within_green_tao = log2_span_ratio <= r.log2_green_tao_bound + 1e-12;
    r.affine_subspace = r.sumset_size == r.size;
    r.linear_subspace = sum == a;
    return r;
}

}  // namespace logrank
