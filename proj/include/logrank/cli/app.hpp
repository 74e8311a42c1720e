#pragma once

#include "logrank/boolmatrix/factorize.hpp"
#include "logrank/boolmatrix/matrix_io.hpp"
#include "logrank/cli/experiments.hpp"
#include "logrank/f2core/set_io.hpp"
#include "logrank/f2core/spectrum.hpp"
#include "logrank/protocol/tree_json.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace logrank {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitNotFound = 2, kExitInvariant = 3 };

struct CliOptions {
    std::string family;
    std::string strategy;
    std::string input;
    std::string a_path;
    std::string b_path;
    std::string tree_path;
    std::string out;
    std::string format = "json";
    std::string k_text;
    std::string p_text = "1/2";
    std::string experiment;
    std::uint64_t seed = 1;
    int n = 8;
    int w = 2;
    int d = 3;
    std::size_t k = 16;
    std::size_t l = 16;
    std::size_t rank = 3;
    std::size_t outliers = 4;
    std::size_t size = 16;
    std::size_t instances = 0;
    std::vector<int> dims;
    std::size_t exact_cap = 20;
    int dense_cap = 20;
    bool timings = false;

    Config config() const {
        Config c;
        c.exact_cap = exact_cap;
        c.dense_cap = dense_cap;
        return c;
    }
};

namespace detail {

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    return in;
}

inline BoolMatrix load_matrix(const std::string& path) {
    if (path.empty()) throw InvalidArgument("a matrix file is required");
    auto in = open_input(path);
    return read_matrix(in);
}

inline F2Set load_set(const std::string& path, const Config& cfg) {
    if (path.empty()) throw InvalidArgument("a set file is required (--a/--b)");
    auto in = open_input(path);
    F2Set s = read_set(in);
    if (s.dimension() > cfg.dimension_cap) throw InvalidArgument("set dimension above dimension_cap");
    return s;
}

inline void emit(const CliOptions& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write '" + o.out + "'");
    f << text;
}

inline ordered_json options_json(const CliOptions& o) {
    ordered_json j;
    j["family"] = o.family;
    j["strategy"] = o.strategy;
    j["input"] = o.input;
    j["a"] = o.a_path;
    j["b"] = o.b_path;
    j["K"] = o.k_text;
    j["exact_cap"] = o.exact_cap;
    j["dense_cap"] = o.dense_cap;
    return j;
}

inline int cmd_gen_matrix(const CliOptions& o, std::ostream& out) {
    const Config cfg = o.config();
    Rng rng(o.seed);
    BoolMatrix m(1, 1);
    if (o.family == "ip")
        m = ip_matrix(o.n, cfg);
    else if (o.family == "random-f2-rank")
        m = random_f2_rank(o.k, o.l, o.rank, rng);
    else if (o.family == "random-real-rank")
        m = random_real_rank(o.k, o.l, o.rank, rng);
    else if (o.family == "random-dense")
        m = random_dense(o.k, o.l, parse_rational(o.p_text), rng);
    else if (o.family == "from-sets")
        m = from_sets(load_set(o.a_path, cfg), load_set(o.b_path, cfg));
    else
        throw InvalidArgument("unknown matrix family '" + o.family +
                              "' (ip, random-f2-rank, random-real-rank, random-dense, from-sets)");
    emit(o, format_matrix(m), out);
    return kExitOk;
}

inline int cmd_gen_sets(const CliOptions& o, std::ostream& out) {
    const Config cfg = o.config();
    Rng rng(o.seed);
    F2Set s(1);
    if (o.family == "weight-slice")
        s = weight_slice(o.n, o.w, cfg);
    else if (o.family == "subspace")
        s = random_subspace(o.n, o.d, rng, cfg);
    else if (o.family == "subspace-plus-noise")
        s = subspace_plus_noise(o.n, o.d, o.outliers, rng, cfg);
    else if (o.family == "random")
        s = random_set(o.n, o.size, rng, cfg);
    else
        throw InvalidArgument("unknown set family '" + o.family + "' (weight-slice, subspace, subspace-plus-noise, random)");
    emit(o, format_set(s), out);
    return kExitOk;
}

inline ordered_json matrix_summary(const BoolMatrix& m) {
    const Dedup d = dedup(m);
    const std::size_t ones = m.count_ones();
    return {{"rows", m.rows()},
            {"cols", m.cols()},
            {"ones", ones},
            {"zeros", m.area() - ones},
            {"discrepancy", to_string(discrepancy(m))},
            {"monochromatic", is_monochromatic(m)},
            {"rank_f2", rank_f2(m)},
            {"rank_real", rank_real(m)},
            {"dedup_rows", d.matrix.rows()},
            {"dedup_cols", d.matrix.cols()}};
}

inline ordered_json set_summary(const F2Set& a, const Config& cfg) {
    const DoublingReport d = doubling_report(a, cfg);
    return {{"dimension", a.dimension()},
            {"size", d.size},
            {"sumset_size", d.sumset_size},
            {"span_size", d.span_size},
            {"doubling", to_string(d.doubling)},
            {"span_ratio", to_string(d.span_ratio)},
            {"affine_subspace", d.affine_subspace},
            {"linear_subspace", d.linear_subspace}};
}

inline int cmd_analyze(const CliOptions& o, std::ostream& out) {
    const Config cfg = o.config();
    ordered_json rep = make_report("analyze", o.seed, options_json(o));
    if (!o.input.empty()) {
        rep["matrix"] = matrix_summary(load_matrix(o.input));
    } else {
        const F2Set a = load_set(o.a_path, cfg);
        rep["a"] = set_summary(a, cfg);
        if (!o.b_path.empty()) {
            const F2Set b = load_set(o.b_path, cfg);
            rep["b"] = set_summary(b, cfg);
            const Rational dual = duality_measure(a, b, cfg);
            rep["duality"] = to_string(dual);
            rep["correlation"] = correlation(a, b, cfg);
            if (dual > 0) rep["a_in_half_spectrum"] = restrict_to_spectrum(a, b, Rational(dual / 2), cfg).size();
        }
    }
    emit(o, format_report(rep, parse_format(o.format)), out);
    return kExitOk;
}

inline int cmd_factor(const CliOptions& o, std::ostream& out) {
    const BoolMatrix m = load_matrix(o.input);
    const Dedup d = dedup(m);
    const Factorization f = factorize_f2(d.matrix);
    ordered_json rep = make_report("factor", o.seed, options_json(o));
    rep["rank_f2"] = f.rank;
    rep["dimension"] = f.dimension;
    rep["row_map"] = d.row_map;
    rep["col_map"] = d.col_map;
    ordered_json rows = ordered_json::array(), cols = ordered_json::array();
    for (Word w : f.row_vectors) rows.push_back(F2Vector(f.dimension, w).str());
    for (Word w : f.col_vectors) cols.push_back(F2Vector(f.dimension, w).str());
    rep["row_vectors"] = std::move(rows);
    rep["col_vectors"] = std::move(cols);
    emit(o, format_report(rep, parse_format(o.format)), out);
    return kExitOk;
}

inline int cmd_dual(const CliOptions& o, std::ostream& out) {
    const Config cfg = o.config();
    const F2Set a = load_set(o.a_path, cfg);
    const F2Set b = load_set(o.b_path, cfg);
    const std::string strategy = o.strategy.empty() ? "pipeline" : o.strategy;
    ordered_json rep = make_report("dual", o.seed, options_json(o));
    rep["duality"] = to_string(duality_measure(a, b, cfg));
    int code = kExitOk;
    if (strategy == "pipeline") {
        const Rational k = o.k_text.empty() ? default_k(a.dimension()) : parse_rational(o.k_text);
        const PipelineTrace tr = find_dual_pair(a, b, k, o.seed, cfg);
        rep["trace"] = trace_to_json(tr);
        if (!tr.ok()) code = kExitNotFound;
    } else if (strategy == "exact") {
        rep["pair"] = to_json(exact_dual_oracle(a, b, cfg));
    } else if (strategy == "greedy") {
        rep["pair"] = to_json(greedy_dual(a, b));
    } else {
        throw InvalidArgument("unknown dual strategy '" + strategy + "' (pipeline, exact, greedy)");
    }
    emit(o, format_report(rep, parse_format(o.format)), out);
    return code;
}

inline int cmd_mono(const CliOptions& o, std::ostream& out) {
    const BoolMatrix m = load_matrix(o.input);
    const MonoStrategy s = parse_mono_strategy(o.strategy.empty() ? "exact" : o.strategy);
    ordered_json rep = make_report("mono", o.seed, options_json(o));
    SubmatrixView v;
    if (s == MonoStrategy::ViaDual) {
        // via-dual needs distinct lines; map the answer back to every copy
        const Dedup d = dedup(m);
        const SubmatrixView dv = find_mono_via_dual(d.matrix, pipeline_finder(o.seed, o.config()), o.config());
        std::vector<bool> rows(d.matrix.rows(), false), cols(d.matrix.cols(), false);
        for (auto i : dv.rows) rows[i] = true;
        for (auto j : dv.cols) cols[j] = true;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (rows[d.row_map[i]]) v.rows.push_back(i);
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (cols[d.col_map[j]]) v.cols.push_back(j);
    } else {
        v = make_mono_finder(s, o.seed, o.config())(m);
    }
    const auto color = mono_color(m, v);
    ensure(color.has_value(), "mono: returned view is not monochromatic");
    rep["strategy"] = to_string(s);
    rep["view"] = to_json(v);
    rep["color"] = *color;
    rep["area_ratio"] = to_string(make_rational(static_cast<std::int64_t>(v.area()), static_cast<std::int64_t>(m.area())));
    emit(o, format_report(rep, parse_format(o.format)), out);
    return kExitOk;
}

inline int cmd_protocol(const CliOptions& o, std::ostream& out) {
    const BoolMatrix m = load_matrix(o.input);
    const MonoStrategy s = parse_mono_strategy(o.strategy.empty() ? "exact" : o.strategy);
    const ProtocolTree tree = build_protocol(m, make_mono_finder(s, o.seed, o.config()));
    emit(o, tree_to_json(tree).dump(2) + "\n", out);
    return kExitOk;
}

inline int cmd_verify(const CliOptions& o, std::ostream& out) {
    const BoolMatrix m = load_matrix(o.input);
    if (o.tree_path.empty()) throw InvalidArgument("verify needs --tree");
    auto in = open_input(o.tree_path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const ProtocolTree tree = parse_tree(text);
    const CostReport c = verify(tree, m);
    const AuditRecord a = leaf_recurrence_audit(tree);
    ordered_json rep = make_report("verify", o.seed, options_json(o));
    rep["entries"] = c.entries;
    rep["m"] = c.m;
    rep["r"] = c.r;
    rep["leaves"] = c.leaves;
    rep["depth"] = c.depth;
    rep["internal"] = c.internal;
    rep["log2_rank"] = c.log2_rank;
    rep["log2_leaves"] = c.log2_leaves;
    rep["rank_over_log_rank"] = c.rank_over_log_rank;
    rep["log2_binomial_bound"] = c.log2_binomial_bound;
    rep["block_inequality"] = c.block_inequality;
    rep["leaves_cover_rank"] = c.leaves_cover_rank;
    rep["area_in_range"] = a.area_in_range;
    ordered_json nodes = ordered_json::array();
    for (const NodeAudit& n : a.nodes)
        nodes.push_back({{"path", n.path},
                         {"area", n.area},
                         {"rank", n.rank},
                         {"delta", to_string(n.delta)},
                         {"speaker", to_string(n.speaker)},
                         {"forced", n.forced},
                         {"rank_r", n.rank_r},
                         {"rank_s", n.rank_s},
                         {"inside_area", n.inside_area},
                         {"inside_rank", n.inside_rank},
                         {"outside_area", n.outside_area},
                         {"outside_rank", n.outside_rank},
                         {"inside_rank_by_block", n.inside_rank_by_block},
                         {"inside_rank_halves", n.inside_rank_halves}});
    rep["nodes"] = std::move(nodes);
    emit(o, format_report(rep, parse_format(o.format)), out);
    return kExitOk;
}

inline int cmd_experiment(const CliOptions& o, std::ostream& out) {
    ExperimentConfig c;
    c.name = o.experiment;
    c.seed = o.seed;
    c.n = o.n;
    c.k = o.k;
    c.l = o.l;
    c.rank = o.rank;
    if (!o.k_text.empty()) c.big_k = parse_rational(o.k_text);
    c.strategy = o.strategy;
    c.family = o.family;
    c.instances = o.instances;
    c.dims = o.dims;
    c.weight = o.w;
    c.subspace_dim = o.d;
    c.outliers = o.outliers;
    c.size = o.size;
    c.timings = o.timings;
    c.cfg = o.config();
    const ordered_json rep = run_experiment(c);
    emit(o, format_report(rep, parse_format(o.format)), out);
    return assertions_hold(rep) ? kExitOk : kExitInvariant;
}

}  // namespace detail

// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CliOptions o;
    CLI::App app{"logrank: F_2 duality, monochromatic rectangles and protocol trees"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sc) {
        sc->add_option("--seed", o.seed, "PRNG seed");
        sc->add_option("--exact-cap", o.exact_cap, "largest side enumerated by exact searches");
        sc->add_option("--dense-cap", o.dense_cap, "largest n for dense 2^n tables");
        sc->add_option("--format", o.format, "report format: json or csv");
        sc->add_option("--out", o.out, "output file (default stdout)");
    };
    auto shape = [&](CLI::App* sc) {
        sc->add_option("--n", o.n, "dimension");
        sc->add_option("--k", o.k, "rows");
        sc->add_option("--l", o.l, "columns");
        sc->add_option("--rank", o.rank, "target rank");
    };

    CLI::App* gen_matrix = app.add_subcommand("gen-matrix", "generate a matrix file");
    common(gen_matrix);
    shape(gen_matrix);
    gen_matrix->add_option("--family", o.family, "ip, random-f2-rank, random-real-rank, random-dense, from-sets")->required();
    gen_matrix->add_option("--p", o.p_text, "entry density for random-dense");
    gen_matrix->add_option("--a", o.a_path, "row set file for from-sets");
    gen_matrix->add_option("--b", o.b_path, "column set file for from-sets");

    CLI::App* gen_sets = app.add_subcommand("gen-sets", "generate a set file");
    common(gen_sets);
    gen_sets->add_option("--family", o.family, "weight-slice, subspace, subspace-plus-noise, random")->required();
    gen_sets->add_option("--n", o.n, "dimension");
    gen_sets->add_option("--w", o.w, "weight for weight-slice");
    gen_sets->add_option("--d", o.d, "subspace dimension");
    gen_sets->add_option("--outliers", o.outliers, "extra vectors for subspace-plus-noise");
    gen_sets->add_option("--size", o.size, "size for random");

    CLI::App* analyze = app.add_subcommand("analyze", "ranks and discrepancy of a matrix, or doubling/duality of sets");
    common(analyze);
    analyze->add_option("input", o.input, "matrix file");
    analyze->add_option("--a", o.a_path, "set file A");
    analyze->add_option("--b", o.b_path, "set file B");

    CLI::App* factor = app.add_subcommand("factor", "deduplicate and factor a matrix over F_2");
    common(factor);
    factor->add_option("input", o.input, "matrix file")->required();

    CLI::App* dual = app.add_subcommand("dual", "find a dual pair inside (A,B)");
    common(dual);
    dual->add_option("--a", o.a_path, "set file A")->required();
    dual->add_option("--b", o.b_path, "set file B")->required();
    dual->add_option("--strategy", o.strategy, "pipeline, exact, greedy");
    dual->add_option("--K", o.k_text, "doubling threshold K (default 2^ceil(4n/log2 n))");

    CLI::App* mono = app.add_subcommand("mono", "find a monochromatic submatrix");
    common(mono);
    mono->add_option("input", o.input, "matrix file")->required();
    mono->add_option("--strategy", o.strategy, "exact, via-dual, greedy");

    CLI::App* protocol = app.add_subcommand("protocol", "build a protocol tree (JSON)");
    common(protocol);
    protocol->add_option("input", o.input, "matrix file")->required();
    protocol->add_option("--strategy", o.strategy, "exact, via-dual, greedy");

    CLI::App* verify_cmd = app.add_subcommand("verify", "simulate a protocol tree on every input");
    common(verify_cmd);
    verify_cmd->add_option("input", o.input, "matrix file")->required();
    verify_cmd->add_option("--tree", o.tree_path, "protocol tree JSON")->required();

    CLI::App* experiment = app.add_subcommand("experiment", "run a named experiment");
    common(experiment);
    shape(experiment);
    experiment->add_option("name", o.experiment, "dual-pipeline, log-rank-sweep, counterexample, doubling, nw-bias")
        ->required();
    experiment->add_option("--K", o.k_text, "doubling threshold K");
    experiment->add_option("--strategy", o.strategy, "mono strategy for log-rank-sweep");
    experiment->add_option("--family", o.family, "set family");
    experiment->add_option("--instances", o.instances, "instances (per rank for log-rank-sweep)");
    experiment->add_option("--dims", o.dims, "dimensions for counterexample");
    experiment->add_option("--w", o.w, "weight");
    experiment->add_option("--d", o.d, "subspace dimension");
    experiment->add_option("--outliers", o.outliers, "outliers");
    experiment->add_option("--size", o.size, "random set size");
    experiment->add_flag("--timings", o.timings, "add wall-clock timings (breaks byte determinism)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen_matrix) return detail::cmd_gen_matrix(o, out);
        if (*gen_sets) return detail::cmd_gen_sets(o, out);
        if (*analyze) return detail::cmd_analyze(o, out);
        if (*factor) return detail::cmd_factor(o, out);
        if (*dual) return detail::cmd_dual(o, out);
        if (*mono) return detail::cmd_mono(o, out);
        if (*protocol) return detail::cmd_protocol(o, out);
        if (*verify_cmd) return detail::cmd_verify(o, out);
        if (*experiment) return detail::cmd_experiment(o, out);
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const NotFound& e) {
        err << "not found: " << e.what() << "\n";
        return kExitNotFound;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace logrank
