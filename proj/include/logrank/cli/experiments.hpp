#pragma once

#include "logrank/adcomb/doubling.hpp"
#include "logrank/adcomb/pfr.hpp"
#include "logrank/approxdual/exact_oracle.hpp"
#include "logrank/approxdual/greedy_dual.hpp"
#include "logrank/approxdual/pipeline.hpp"
#include "logrank/boolmatrix/biased.hpp"
#include "logrank/cli/generators.hpp"
#include "logrank/cli/report.hpp"
#include "logrank/protocol/verify.hpp"

#include <chrono>
#include <map>

namespace logrank {

struct ExperimentConfig {
    std::string name;
    std::uint64_t seed = 1;
    int n = 8;
    std::size_t k = 16;
    std::size_t l = 16;
    std::size_t rank = 6;
    std::optional<Rational> big_k;
    std::string strategy;
    std::string family;
    std::size_t instances = 0;  // 0: the experiment's default
    std::vector<int> dims;      // counterexample dimensions
    int weight = 2;
    int subspace_dim = 3;
    std::size_t outliers = 4;
    std::size_t size = 16;
    bool timings = false;
    Config cfg;

    ordered_json to_json() const {
        ordered_json j;
        j["experiment"] = name;
        j["seed"] = seed;
        j["n"] = n;
        j["k"] = k;
        j["l"] = l;
        j["rank"] = rank;
        j["K"] = big_k ? ordered_json(logrank::to_string(*big_k)) : ordered_json(nullptr);
        j["strategy"] = strategy;
        j["family"] = family;
        j["instances"] = instances;
        j["dims"] = dims;
        j["weight"] = weight;
        j["subspace_dim"] = subspace_dim;
        j["outliers"] = outliers;
        j["size"] = size;
        j["exact_cap"] = cfg.exact_cap;
        j["dense_cap"] = cfg.dense_cap;
        j["dimension_cap"] = cfg.dimension_cap;
        return j;
    }
};

namespace detail {

inline std::size_t instances_or(const ExperimentConfig& c, std::size_t fallback) {
    return c.instances ? c.instances : fallback;
}

inline std::string family_or(const ExperimentConfig& c, const std::string& fallback) {
    return c.family.empty() ? fallback : c.family;
}

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// (A, B) for the set-pair families used by dual-pipeline.
inline std::pair<F2Set, F2Set> set_pair(const std::string& family, const ExperimentConfig& c, Rng& rng) {
    if (family == "subspace") {
        F2Set v = random_subspace(c.n, c.subspace_dim, rng, c.cfg);
        F2Set w = annihilator(v, c.cfg);
        return {std::move(v), std::move(w)};
    }
    if (family == "subspace-plus-noise") {
        const LinearBasis basis = random_basis(c.n, c.subspace_dim, rng);
        F2Set v = subspace_of(basis, c.cfg);
        F2Set w = annihilator(v, c.cfg);
        std::vector<Word> words(v.begin(), v.end());
        while (words.size() < v.size() + c.outliers) {
            const Word x = random_word(c.n, rng);
            if (!basis.contains(x) && std::find(words.begin(), words.end(), x) == words.end()) words.push_back(x);
        }
        return {F2Set(c.n, std::move(words)), std::move(w)};
    }
    if (family == "random") return {random_set(c.n, c.size, rng, c.cfg), random_set(c.n, c.size, rng, c.cfg)};
    if (family == "weight-slice") {
        F2Set a = weight_slice(c.n, c.weight, c.cfg);
        return {a, a};
    }
    throw InvalidArgument("unknown set-pair family '" + family + "' (subspace, subspace-plus-noise, random, weight-slice)");
}

inline F2Set single_set(const std::string& family, const ExperimentConfig& c, Rng& rng) {
    if (family == "subspace") return random_subspace(c.n, c.subspace_dim, rng, c.cfg);
    if (family == "subspace-plus-noise") return subspace_plus_noise(c.n, c.subspace_dim, c.outliers, rng, c.cfg);
    if (family == "random") return random_set(c.n, c.size, rng, c.cfg);
    if (family == "weight-slice") return weight_slice(c.n, c.weight, c.cfg);
    throw InvalidArgument("unknown set family '" + family + "' (subspace, subspace-plus-noise, random, weight-slice)");
}

inline ordered_json trace_to_json(const PipelineTrace& tr) {
    ordered_json j;
    j["ok"] = tr.ok();
    if (tr.failure) j["failure"] = {{"stage", tr.failure->stage}, {"kind", tr.failure->kind}, {"message", tr.failure->message}};
    if (tr.sequence) {
        const SequenceState& st = *tr.sequence;
        j["duality"] = to_string(st.duality);
        j["K"] = to_string(st.k);
        j["t"] = st.t;
        j["stop_bound_holds"] = st.stop_bound_holds;
        ordered_json levels = ordered_json::array();
        for (std::size_t i = 0; i < st.levels.size(); ++i) {
            const SequenceLevel& lv = st.levels[i];
            levels.push_back({{"i", i + 1},
                              {"size", lv.set.size()},
                              {"epsilon", to_string(lv.epsilon)},
                              {"bucket", lv.bucket},
                              {"bucket_pairs", lv.bucket_pairs},
                              {"pair_probability", to_string(lv.pair_probability)},
                              {"pair_bound_holds", lv.pair_bound_holds},
                              {"size_bound_holds", lv.size_bound_holds}});
        }
        j["levels"] = std::move(levels);
    }
    ordered_json base;
    if (tr.base.bsg) {
        const BsgResult& b = *tr.base.bsg;
        base["bsg"] = {{"size", b.subset.size()},          {"ratio_in", to_string(b.ratio_in)},
                       {"doubling_out", to_string(b.doubling_out)}, {"self_doubling", to_string(b.self_doubling)},
                       {"density", to_string(b.density)},   {"size_floor", b.size_floor},
                       {"candidates", b.candidates}};
    }
    if (tr.base.pfr) {
        const PfrResult& p = *tr.base.pfr;
        base["pfr"] = {{"size", p.subset.size()}, {"span_size", p.span_size},   {"ratio", to_string(p.ratio)},
                       {"strategy", p.strategy},  {"singleton_waiver", p.singleton_waiver},
                       {"doubling", to_string(p.doubling)}};
    }
    if (tr.base.small_span) {
        const SmallSpanResult& s = *tr.base.small_span;
        base["small_span"] = {{"a_size", s.pair.a().size()},
                              {"b_size", s.pair.b().size()},
                              {"span_size", s.span_size},
                              {"classes", s.classes},
                              {"guaranteed_b", to_string(s.guaranteed_b)},
                              {"reference_bound_general", to_string(s.reference_bound_general)},
                              {"reference_bound_in_spectrum", to_string(s.reference_bound_in_spectrum)}};
    }
    j["base_case"] = std::move(base);
    ordered_json pairs = ordered_json::array();
    for (const LevelPair& lp : tr.levels)
        pairs.push_back({{"level", lp.level},
                         {"a_size", lp.pair.a().size()},
                         {"b_size", lp.pair.b().size()},
                         {"constant_bit", lp.pair.constant_bit()},
                         {"component_size", lp.component_size},
                         {"edges", lp.edges}});
    j["level_pairs"] = std::move(pairs);
    if (tr.result) {
        j["pair"] = to_json(*tr.result);
        j["ratio_a"] = to_string(tr.ratio_a);
        j["ratio_b"] = to_string(tr.ratio_b);
        j["log2_reference"] = tr.log2_reference;
    }
    return j;
}

}  // namespace detail

// find_dual_pair against the exact oracle on seeded set pairs.
inline ordered_json experiment_dual_pipeline(const ExperimentConfig& c) {
    const std::string family = detail::family_or(c, "subspace");
    ordered_json rep = make_report("experiment", c.seed, c.to_json());
    ordered_json table = ordered_json::array(), details = ordered_json::array();
    std::size_t ok = 0, matches = 0, compared = 0;
    bool dominated = true;
    for (std::size_t i = 0; i < detail::instances_or(c, 10); ++i) {
        const std::uint64_t seed = derive_seed(c.seed, i);
        Rng rng(seed);
        auto [a, b] = detail::set_pair(family, c, rng);
        const Rational k = c.big_k ? *c.big_k : default_k(c.n);
        const detail::Stopwatch clock;
        const PipelineTrace tr = find_dual_pair(a, b, k, seed, c.cfg);
        ordered_json row;
        row["instance"] = i;
        row["seed"] = seed;
        row["n"] = c.n;
        row["a_size"] = a.size();
        row["b_size"] = b.size();
        row["duality"] = to_string(duality_measure(a, b, c.cfg));
        row["ok"] = tr.ok();
        row["failure_stage"] = tr.failure ? tr.failure->stage : "";
        row["failure_kind"] = tr.failure ? tr.failure->kind : "";
        row["t"] = tr.sequence ? tr.sequence->t : -1;
        row["pair_area"] = tr.result ? tr.result->area() : 0;
        row["ratio_a"] = tr.result ? to_string(tr.ratio_a) : "";
        row["ratio_b"] = tr.result ? to_string(tr.ratio_b) : "";
        if (std::min(a.size(), b.size()) <= c.cfg.exact_cap) {
            const DualPair best = exact_dual_oracle(a, b, c.cfg);
            row["oracle_area"] = best.area();
            if (tr.result) {
                ++compared;
                const bool equal = best.area() == tr.result->area();
                matches += equal ? 1 : 0;
                dominated = dominated && best.area() >= tr.result->area();
                row["matches_oracle"] = equal;
            } else {
                row["matches_oracle"] = nullptr;
            }
        } else {
            row["oracle_area"] = nullptr;
            row["matches_oracle"] = nullptr;
        }
        if (c.timings) row["ms"] = clock.ms();
        ok += tr.ok() ? 1 : 0;
        ordered_json d = detail::trace_to_json(tr);
        d["instance"] = i;
        details.push_back(std::move(d));
        table.push_back(std::move(row));
    }
    rep["summary"] = {{"family", family}, {"succeeded", ok}, {"compared", compared}, {"matches_oracle", matches}};
    rep["assertions"] = {{"oracle_dominates_pipeline", dominated}};
    rep["table"] = std::move(table);
    rep["details"] = std::move(details);
    return rep;
}

// Protocol size over a grid of real ranks; the table holds per-rank means.
inline ordered_json experiment_log_rank_sweep(const ExperimentConfig& c) {
    const MonoStrategy strategy = parse_mono_strategy(c.strategy.empty() ? "exact" : c.strategy);
    ordered_json rep = make_report("experiment", c.seed, c.to_json());
    ordered_json table = ordered_json::array(), instances = ordered_json::array();
    const std::size_t per_rank = detail::instances_or(c, 50);
    bool all_verified = true;
    std::size_t index = 0;
    for (std::size_t r = 2; r <= c.rank; ++r) {
        double leaves = 0, depth = 0;
        for (std::size_t s = 0; s < per_rank; ++s, ++index) {
            const std::uint64_t seed = derive_seed(c.seed, index);
            Rng rng(seed);
            const BoolMatrix m = random_real_rank(c.k, c.l, r, rng);
            const ProtocolTree tree = build_protocol(m, make_mono_finder(strategy, seed, c.cfg));
            const CostReport cost = verify(tree, m);
            const AuditRecord audit = leaf_recurrence_audit(tree);
            all_verified = all_verified && cost.block_inequality && cost.leaves_cover_rank && audit.area_in_range;
            leaves += static_cast<double>(cost.leaves);
            depth += static_cast<double>(cost.depth);
            instances.push_back({{"rank", r}, {"seed", seed}, {"leaves", cost.leaves}, {"depth", cost.depth},
                                 {"dedup_area", cost.m}});
        }
        const double rr = static_cast<double>(r);
        table.push_back({{"rank", r},
                         {"instances", per_rank},
                         {"mean_leaves", leaves / static_cast<double>(per_rank)},
                         {"mean_depth", depth / static_cast<double>(per_rank)},
                         {"rank_over_log_rank", r <= 2 ? rr : rr / std::log2(rr)},
                         {"log2_rank", std::log2(rr)}});
    }
    rep["summary"] = {{"strategy", to_string(strategy)}, {"k", c.k}, {"l", c.l}};
    rep["assertions"] = {{"protocols_verified", all_verified}};
    rep["table"] = std::move(table);
    rep["instances"] = std::move(instances);
    return rep;
}

// Weight-w slices: duality and the exact largest dual pair as n grows.
inline ordered_json experiment_counterexample(const ExperimentConfig& c) {
    const std::vector<int> dims = c.dims.empty() ? std::vector<int>{6, 8, 10} : c.dims;
    ordered_json rep = make_report("experiment", c.seed, c.to_json());
    ordered_json table = ordered_json::array();
    std::vector<Rational> ratios;
    for (int n : dims) {
        const F2Set a = weight_slice(n, c.weight, c.cfg);
        if (a.empty()) throw InvalidArgument("counterexample: empty weight slice");
        Config cfg = c.cfg;
        cfg.exact_cap = std::max(cfg.exact_cap, a.size());
        const DualPair best = exact_dual_oracle(a, a, cfg);
        const DualPair greedy = greedy_dual(a, a);
        const auto sq = static_cast<std::int64_t>(a.size() * a.size());
        const Rational ratio = make_rational(static_cast<std::int64_t>(best.area()), sq);
        ratios.push_back(ratio);
        table.push_back({{"n", n},
                         {"weight", c.weight},
                         {"set_size", a.size()},
                         {"duality", to_string(duality_measure(a, a, c.cfg))},
                         {"oracle_area", best.area()},
                         {"oracle_a_size", best.a().size()},
                         {"oracle_b_size", best.b().size()},
                         {"oracle_bit", best.constant_bit()},
                         {"area_ratio", to_string(ratio)},
                         {"area_ratio_value", to_double(ratio)},
                         {"greedy_area", greedy.area()},
                         {"exact_cap_used", cfg.exact_cap}});
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < ratios.size(); ++i) decreasing = decreasing && ratios[i] < ratios[i - 1];
    rep["findings"] = {{"ratio_strictly_decreasing", decreasing}};
    rep["assertions"] = ordered_json::object();
    rep["table"] = std::move(table);
    return rep;
}

// Doubling diagnostics and PFR extraction on seeded sets.
inline ordered_json experiment_doubling(const ExperimentConfig& c) {
    const std::string family = detail::family_or(c, "subspace-plus-noise");
    ordered_json rep = make_report("experiment", c.seed, c.to_json());
    ordered_json table = ordered_json::array();
    bool span_ok = true;
    for (std::size_t i = 0; i < detail::instances_or(c, 10); ++i) {
        const std::uint64_t seed = derive_seed(c.seed, i);
        Rng rng(seed);
        const F2Set a = detail::single_set(family, c, rng);
        const DoublingReport d = doubling_report(a, c.cfg);
        const PfrResult p = pfr_extract(a, PfrStrategy::Auto, c.cfg);
        span_ok = span_ok && (p.singleton_waiver || p.span_size <= a.size());
        table.push_back({{"instance", i},
                         {"seed", seed},
                         {"size", d.size},
                         {"sumset_size", d.sumset_size},
                         {"span_size", d.span_size},
                         {"doubling", to_string(d.doubling)},
                         {"span_ratio", to_string(d.span_ratio)},
                         {"within_freiman", d.within_freiman},
                         {"within_green_tao", d.within_green_tao},
                         {"affine_subspace", d.affine_subspace},
                         {"linear_subspace", d.linear_subspace},
                         {"pfr_size", p.subset.size()},
                         {"pfr_span_size", p.span_size},
                         {"pfr_ratio", to_string(p.ratio)},
                         {"pfr_strategy", p.strategy},
                         {"pfr_reference_floor", p.reference_floor}});
    }
    rep["summary"] = {{"family", family}};
    rep["assertions"] = {{"pfr_span_bound", span_ok}};
    rep["table"] = std::move(table);
    return rep;
}

// find_biased_submatrix on random matrices: real rank r uniform in 1..c.rank,
// then k in r..c.k and l in r..c.l.
inline ordered_json experiment_nw_bias(const ExperimentConfig& c) {
    ordered_json rep = make_report("experiment", c.seed, c.to_json());
    ordered_json table = ordered_json::array();
    std::map<std::string, std::size_t> outcomes;
    bool contract_ok = true;
    for (std::size_t i = 0; i < detail::instances_or(c, 100); ++i) {
        const std::uint64_t seed = derive_seed(c.seed, i);
        Rng rng(seed);
        const std::size_t r = 1 + uniform_below(rng, std::min({c.rank, c.k, c.l}));
        const std::size_t k = r + uniform_below(rng, c.k - r + 1);
        const std::size_t l = r + uniform_below(rng, c.l - r + 1);
        const BoolMatrix m = random_real_rank(k, l, r, rng);
        ordered_json row{{"instance", i}, {"seed", seed}, {"k", k}, {"l", l}, {"rank", r}};
        try {
            const BiasedSubmatrix b = find_biased_submatrix(m, c.cfg);
            const bool met = meets_bias_contract(m, b.view, b.rank);
            contract_ok = contract_ok && met;
            const std::size_t ones = count_ones(m, b.view);
            row["outcome"] = b.strategy;
            row["area"] = b.view.area();
            row["imbalance"] = ones > b.view.area() - ones ? 2 * ones - b.view.area() : b.view.area() - 2 * ones;
            row["discrepancy"] = to_string(discrepancy(m, b.view));
            row["contract_met"] = met;
        } catch (const ContractUnattainable&) {
            row["outcome"] = "unattainable";
            row["contract_met"] = false;
        } catch (const NotFound&) {
            row["outcome"] = "not_found";
            row["contract_met"] = false;
        }
        ++outcomes[row["outcome"].get<std::string>()];
        table.push_back(std::move(row));
    }
    ordered_json counts = ordered_json::object();
    for (const auto& [key, count] : outcomes) counts[key] = count;
    rep["summary"] = {{"outcomes", counts}};
    rep["assertions"] = {{"returned_views_meet_contract", contract_ok}};
    rep["table"] = std::move(table);
    return rep;
}

inline const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names{"dual-pipeline", "log-rank-sweep", "counterexample", "doubling", "nw-bias"};
    return names;
}

inline ordered_json run_experiment(const ExperimentConfig& c) {
    if (c.name == "dual-pipeline") return experiment_dual_pipeline(c);
    if (c.name == "log-rank-sweep") return experiment_log_rank_sweep(c);
    if (c.name == "counterexample") return experiment_counterexample(c);
    if (c.name == "doubling") return experiment_doubling(c);
    if (c.name == "nw-bias") return experiment_nw_bias(c);
    throw InvalidArgument("unknown experiment '" + c.name + "'");
}

// True when every runtime assertion recorded in the report held.
inline bool assertions_hold(const ordered_json& report) {
    if (!report.contains("assertions")) return true;
    for (const auto& [_, v] : report.at("assertions").items())
        if (!v.get<bool>()) return false;
    return true;
}

}  // namespace logrank
