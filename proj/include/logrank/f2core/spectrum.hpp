#pragma once

#include "logrank/f2core/ops.hpp"

namespace logrank {

enum class SpectrumMethod { Auto, Transform, Direct };

// Spec_alpha(B) together with every bias, held as integer character sums over
// the common denominator |B|.
struct SpectrumResult {
    int dimension = 0;
    Rational alpha;
    std::int64_t denominator = 0;
    std::vector<std::int64_t> sums;  // indexed by x
    F2Set members{1};

    Rational bias(Word x) const { return make_rational(sums.at(x), denominator); }
    bool contains(Word x) const { return members.contains(x); }
};

// Smallest |character sum| that puts x into Spec_alpha(B).
inline std::int64_t spectrum_threshold(const Rational& alpha, std::size_t b_size) {
    return ceil_times(alpha, static_cast<std::int64_t>(b_size));
}

inline bool passes_threshold(std::int64_t sum, std::int64_t threshold) {
    return (sum < 0 ? -sum : sum) >= threshold;
}

inline SpectrumResult spectrum(const F2Set& b, const Rational& alpha, const Config& cfg = {},
                               SpectrumMethod method = SpectrumMethod::Auto) {
    if (b.empty()) throw InvalidArgument("spectrum of an empty set");
    if (alpha < 0 || alpha > 1) throw InvalidArgument("spectrum threshold must lie in [0,1]");
    const int n = b.dimension();
    if (method == SpectrumMethod::Auto)
        method = n <= cfg.dense_cap ? SpectrumMethod::Transform : SpectrumMethod::Direct;
    if (n > cfg.dimension_cap) throw CapExceeded("spectrum table above dimension_cap");

    SpectrumResult res;
    res.dimension = n;
    res.alpha = alpha;
    res.denominator = static_cast<std::int64_t>(b.size());
    if (method == SpectrumMethod::Transform) {
        res.sums = character_table(b, cfg);
    } else {
        res.sums.resize(std::size_t{1} << n);
        for (std::size_t x = 0; x < res.sums.size(); ++x)
            res.sums[x] = character_sum(b, static_cast<Word>(x));
    }
    const std::int64_t thr = spectrum_threshold(alpha, b.size());
    std::vector<Word> members;
    for (std::size_t x = 0; x < res.sums.size(); ++x)
        if (passes_threshold(res.sums[x], thr)) members.push_back(static_cast<Word>(x));
    res.members = F2Set::from_sorted(n, std::move(members));
    return res;
}

// A intersected with Spec_alpha(B), without materialising the full spectrum.
inline F2Set restrict_to_spectrum(const F2Set& a, const F2Set& b, const Rational& alpha,
                                  const Config& cfg = {}) {
    a.same_dimension(b);
    if (b.empty()) throw InvalidArgument("spectrum of an empty set");
    const std::int64_t thr = spectrum_threshold(alpha, b.size());
    const auto sums = character_sums(b, a.words(), cfg);
    std::vector<Word> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (passes_threshold(sums[i], thr)) out.push_back(a[i]);
    return F2Set::from_sorted(a.dimension(), std::move(out));
}

}  // namespace logrank
