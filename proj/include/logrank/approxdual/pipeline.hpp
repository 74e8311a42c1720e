#pragma once

#include "logrank/adcomb/bsg.hpp"
#include "logrank/adcomb/pfr.hpp"
#include "logrank/approxdual/pull_back.hpp"
#include "logrank/approxdual/sequence.hpp"
#include "logrank/approxdual/small_span.hpp"

#include <optional>

namespace logrank {

// Which kind of library error a caught exception was; used in stage labels.
inline std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const GraphEmpty*>(&e)) return "GraphEmpty";
    if (dynamic_cast<const EmptyNext*>(&e)) return "EmptyNext";
    if (dynamic_cast<const ZeroDuality*>(&e)) return "ZeroDuality";
    if (dynamic_cast<const DensityTooLow*>(&e)) return "DensityTooLow";
    if (dynamic_cast<const NotFound*>(&e)) return "NotFound";
    if (dynamic_cast<const CapExceeded*>(&e)) return "CapExceeded";
    if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
    if (dynamic_cast<const InvalidArgument*>(&e)) return "InvalidArgument";
    if (dynamic_cast<const InvariantViolation*>(&e)) return "InvariantViolation";
    return "Error";
}

// A stage of the dual-pair pipeline failed; stage() names it.
class StageError : public NotFound {
public:
    StageError(std::string stage, std::string kind, const std::string& what)
        : NotFound(stage + ": " + what), stage_(std::move(stage)), kind_(std::move(kind)) {}
    const std::string& stage() const { return stage_; }
    const std::string& kind() const { return kind_; }

private:
    std::string stage_;
    std::string kind_;
};

struct BaseCaseTrace {
    std::optional<BsgResult> bsg;
    std::optional<PfrResult> pfr;
    std::optional<SmallSpanResult> small_span;
};

namespace detail {

template <class F>
auto run_stage(const std::string& stage, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InvariantViolation&) {
        throw;
    } catch (const StageError&) {
        throw;
    } catch (const Error& e) {
        throw StageError(stage, error_kind(e), e.what());
    }
}

}  // namespace detail

// Level-t pair: BSG on (A_t, A_{t+1}) at density eps_{t+1}/n, then PFR, then
// the small-span construction against B at threshold eps_t. Stages fill
// `trace` as they complete.
inline DualPair base_case_dual(const SequenceState& st, std::uint64_t seed, BaseCaseTrace& trace,
                               const Config& cfg = {}) {
    const int t = st.t;
    const SequenceLevel& at = st.level(t);
    const SequenceLevel& next = st.level(t + 1);
    const Rational rho = next.epsilon / st.dimension;
    trace.bsg = detail::run_stage("bsg", [&] { return bsg_extract(at.set, next.set, rho, seed, cfg); });
    trace.pfr = detail::run_stage("pfr", [&] { return pfr_extract(trace.bsg->subset, PfrStrategy::Auto, cfg); });
    trace.small_span =
        detail::run_stage("small_span", [&] { return small_span_dual(trace.pfr->subset, st.b, at.epsilon, cfg); });
    ensure(trace.small_span->pair.a().is_subset_of(at.set), "base case pair leaves A_t");
    return trace.small_span->pair;
}

struct LevelPair {
    int level = 0;
    DualPair pair;
    std::size_t component_size = 0;  // 0 at level t
    std::int64_t edges = 0;
};

struct StageFailure {
    std::string stage;
    std::string kind;
    std::string message;
};

struct PipelineTrace {
    std::optional<SequenceState> sequence;
    BaseCaseTrace base;
    std::vector<LevelPair> levels;  // ordered t, t-1, ..., 1
    std::optional<DualPair> result;
    std::optional<StageFailure> failure;
    Rational ratio_a;  // |A'| / |A|
    Rational ratio_b;  // |B'| / |B|
    // log2 of (4n)^{-t}, the shape of the size guarantee with its poly factors dropped
    double log2_reference = 0;

    bool ok() const { return result.has_value(); }
};

// Sequence, base case at level t, then pull-backs down to level 1. Stage
// failures are recorded in the trace rather than thrown; invariant
// violations always propagate.
inline PipelineTrace find_dual_pair(const F2Set& a, const F2Set& b, const Rational& k, std::uint64_t seed,
                                    const Config& cfg = {}) {
    a.same_dimension(b);
    PipelineTrace tr;
    try {
        tr.sequence = detail::run_stage("sequence", [&] { return run_sequence(a, b, k, cfg); });
        const SequenceState& st = *tr.sequence;
        DualPair pair = base_case_dual(st, seed, tr.base, cfg);
        tr.levels.push_back({st.t, pair, 0, 0});
        for (int i = st.t; i >= 2; --i) {
            PullBackResult pb = detail::run_stage(
                "pull_back", [&] { return pull_back(st.level(i - 1).set, pair, st.level(i).set); });
            ensure(pb.pair.a().is_subset_of(st.level(i - 1).set), "pulled-back pair leaves A_{i-1}");
            pair = pb.pair;
            tr.levels.push_back({i - 1, pair, pb.component_size, pb.edges});
        }
        ensure(pair.a().is_subset_of(a) && pair.b().is_subset_of(b), "final pair is not inside (A,B)");
        tr.ratio_a = make_rational(static_cast<std::int64_t>(pair.a().size()), static_cast<std::int64_t>(a.size()));
        tr.ratio_b = make_rational(static_cast<std::int64_t>(pair.b().size()), static_cast<std::int64_t>(b.size()));
        tr.log2_reference = -st.t * std::log2(4.0 * a.dimension());
        tr.result = std::move(pair);
    } catch (const StageError& e) {
        tr.failure = StageFailure{e.stage(), e.kind(), e.what()};
    }
    return tr;
}

inline PipelineTrace find_dual_pair(const F2Set& a, const F2Set& b, std::uint64_t seed, const Config& cfg = {}) {
    return find_dual_pair(a, b, default_k(a.dimension()), seed, cfg);
}

// The pipeline as a DualFinder; throws StageError where find_dual_pair records.
inline DualFinder pipeline_finder(std::uint64_t seed, const Config& cfg = {}, std::optional<Rational> k = {}) {
    return [seed, cfg, k](const F2Set& a, const F2Set& b) {
        PipelineTrace tr = k ? find_dual_pair(a, b, *k, seed, cfg) : find_dual_pair(a, b, seed, cfg);
        if (!tr.ok()) throw StageError(tr.failure->stage, tr.failure->kind, tr.failure->message);
        return *tr.result;
    };
}

}  // namespace logrank
