#pragma once

#include "logrank/approxdual/pipeline.hpp"
#include "logrank/boolmatrix/mono.hpp"
#include "logrank/boolmatrix/mono_via_dual.hpp"

namespace logrank {

// Returns a monochromatic view of a deduplicated, non-monochromatic matrix.
using MonoFinder = std::function<SubmatrixView(const BoolMatrix&)>;

enum class MonoStrategy { Exact, ViaDual, Greedy };

inline std::string to_string(MonoStrategy s) {
    switch (s) {
        case MonoStrategy::Exact: return "exact";
        case MonoStrategy::ViaDual: return "via-dual";
        case MonoStrategy::Greedy: return "greedy";
    }
    return "?";
}

inline MonoStrategy parse_mono_strategy(const std::string& s) {
    if (s == "exact") return MonoStrategy::Exact;
    if (s == "via-dual") return MonoStrategy::ViaDual;
    if (s == "greedy") return MonoStrategy::Greedy;
    throw InvalidArgument("unknown mono strategy '" + s + "' (exact, via-dual, greedy)");
}

// The via-dual finder falls back to greedy_mono when the biased-submatrix
// search or the dual pipeline comes up empty; correctness of the protocol
// does not depend on which rectangle is used.
inline MonoFinder make_mono_finder(MonoStrategy s, std::uint64_t seed = 0, const Config& cfg = {}) {
    switch (s) {
        case MonoStrategy::Exact:
            return [cfg](const BoolMatrix& m) { return max_mono_exact(m, cfg); };
        case MonoStrategy::Greedy:
            return [](const BoolMatrix& m) { return greedy_mono(m); };
        case MonoStrategy::ViaDual:
            return [seed, cfg](const BoolMatrix& m) {
                try {
                    return find_mono_via_dual(m, pipeline_finder(seed, cfg), cfg);
                } catch (const NotFound&) {
                    return greedy_mono(m);
                }
            };
    }
    throw InvalidArgument("unknown mono strategy");
}

}  // namespace logrank
