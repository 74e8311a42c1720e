#pragma once

#include "logrank/f2core/spectrum.hpp"

#include <bit>
#include <cmath>

namespace logrank {

class ZeroDuality : public NotFound {
public:
    using NotFound::NotFound;
};

class EmptyNext : public NotFound {
public:
    using NotFound::NotFound;
};

struct MarkovRestriction {
    F2Set set{1};
    Rational epsilon;  // D(A,B) / 2
    Rational duality;  // D(A,B)
};

// A_1 = A intersected with Spec_{D/2}(B); Markov guarantees |A_1| >= (D/2)|A|.
inline MarkovRestriction markov_restrict(const F2Set& a, const F2Set& b, const Config& cfg = {}) {
    MarkovRestriction r;
    r.duality = duality_measure(a, b, cfg);
    if (r.duality == 0) throw ZeroDuality("markov_restrict: D(A,B) = 0");
    r.epsilon = r.duality / 2;
    r.set = restrict_to_spectrum(a, b, r.epsilon, cfg);
    ensure(Rational(static_cast<std::int64_t>(r.set.size())) >= r.epsilon * static_cast<std::int64_t>(a.size()),
           "Markov bound |A_1| >= (D/2)|A| violated");
    return r;
}

struct NextSet {
    F2Set set{1};
    int bucket = 0;                // j: 2^j <= rep(x) <= 2^{j+1}
    std::int64_t bucket_pairs = 0;  // ordered pairs (a,a') whose sum lands in the set
    Rational pair_probability;      // bucket_pairs / |A_prev|^2
    bool pair_bound_holds = false;  // pair_probability >= eps / n
    bool size_bound_holds = false;  // |A_next| >= eps |A_prev|^2 / (2^{j+1} n)
};

// Among sums a+a' in Spec_eps(B), keep the dyadic representation-count bucket
// holding the most ordered pairs. Buckets are closed on both ends, so a count
// of exactly 2^j sits in buckets j-1 and j; ties go to the larger j.
inline NextSet next_set(const F2Set& a_prev, const F2Set& b, const Rational& eps_next, const Config& cfg = {}) {
    a_prev.same_dimension(b);
    if (a_prev.empty()) throw InvalidArgument("next_set needs a nonempty previous set");
    const int n = a_prev.dimension();
    const auto reps = sum_representations(a_prev, cfg);
    std::vector<Word> sums;
    sums.reserve(reps.size());
    for (const auto& [x, c] : reps) sums.push_back(x);
    const auto chars = character_sums(b, sums, cfg);
    const std::int64_t thr = spectrum_threshold(eps_next, b.size());

    std::vector<std::int64_t> bucket_pairs(static_cast<std::size_t>(n), 0);
    std::vector<bool> in_spec(reps.size(), false);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (!passes_threshold(chars[i], thr)) continue;
        in_spec[i] = true;
        const std::int64_t rep = reps[i].second;
        for (int j = 0; j < n; ++j) {
            const std::int64_t lo = std::int64_t{1} << j;
            if (lo <= rep && rep <= 2 * lo) bucket_pairs[static_cast<std::size_t>(j)] += rep;
        }
    }
    int best = 0;
    for (int j = 1; j < n; ++j)
        if (bucket_pairs[static_cast<std::size_t>(j)] >= bucket_pairs[static_cast<std::size_t>(best)]) best = j;
    if (bucket_pairs[static_cast<std::size_t>(best)] == 0)
        throw EmptyNext("next_set: no sum of the previous set lies in Spec_eps(B)");

    NextSet out;
    out.bucket = best;
    out.bucket_pairs = bucket_pairs[static_cast<std::size_t>(best)];
    const std::int64_t lo = std::int64_t{1} << best;
    std::vector<Word> members;
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (in_spec[i] && lo <= reps[i].second && reps[i].second <= 2 * lo) members.push_back(reps[i].first);
    out.set = F2Set::from_sorted(n, std::move(members));
    const auto prev = static_cast<std::int64_t>(a_prev.size());
    out.pair_probability = make_rational(out.bucket_pairs, prev * prev);
    out.pair_bound_holds = out.pair_probability >= eps_next / n;
    const Rational size_floor = eps_next * Rational(prev * prev) / Rational(BigInt(2 * lo) * n);
    out.size_bound_holds = Rational(static_cast<std::int64_t>(out.set.size())) >= size_floor;
    return out;
}

struct SequenceLevel {
    F2Set set{1};
    Rational epsilon;
    int bucket = -1;  // -1 on level 1, which comes from the Markov step
    std::int64_t bucket_pairs = 0;
    Rational pair_probability;
    bool pair_bound_holds = true;
    bool size_bound_holds = true;
};

// Levels A_1, ..., A_{t+1} with thresholds eps_1 = D/2, eps_i = eps_{i-1}^2 / 2,
// and t the first index with |A_{t+1}| <= K |A_t|.
struct SequenceState {
    int dimension = 0;
    Rational k;
    Rational duality;
    F2Set a{1};
    F2Set b{1};
    std::vector<SequenceLevel> levels;  // levels[i-1] is A_i
    int t = 0;
    bool stop_bound_holds = false;  // t <= ceil(n / log2 K)

    const SequenceLevel& level(int i) const { return levels.at(static_cast<std::size_t>(i - 1)); }
};

// K = 2^{ceil(4n / log2 n)}; log2 n is taken as 1 for n <= 2.
inline Rational default_k(int n) {
    const double log_n = n <= 2 ? 1.0 : std::log2(static_cast<double>(n));
    const auto exponent = static_cast<unsigned>(std::ceil(4.0 * n / log_n - 1e-12));
    return Rational(BigInt(1) << exponent);
}

// t <= ceil(n / log2 K)  <=>  K^{t-1} < 2^n
inline bool stopping_index_within_bound(int t, const Rational& k, int n) {
    Rational power = 1;
    for (int i = 1; i < t; ++i) power *= k;
    return power < Rational(BigInt(1) << n);
}

inline SequenceState run_sequence(const F2Set& a, const F2Set& b, const Rational& k, const Config& cfg = {}) {
    a.same_dimension(b);
    if (k <= 1) throw InvalidArgument("run_sequence needs K > 1");
    SequenceState st;
    st.dimension = a.dimension();
    st.k = k;
    st.a = a;
    st.b = b;
    const MarkovRestriction first = markov_restrict(a, b, cfg);
    st.duality = first.duality;
    SequenceLevel l1;
    l1.set = first.set;
    l1.epsilon = first.epsilon;
    st.levels.push_back(std::move(l1));

    const int guard = st.dimension + 2;
    for (int i = 1;; ++i) {
        const SequenceLevel& cur = st.levels.back();
        const Rational eps_next = cur.epsilon * cur.epsilon / 2;
        NextSet nx = next_set(cur.set, b, eps_next, cfg);
        ensure(nx.pair_bound_holds, "pair-probability bound Pr[a+a' in A_i] >= eps_i/n violated at level " +
                                        std::to_string(i + 1));
        ensure(nx.size_bound_holds, "size bound |A_i| >= eps_i |A_{i-1}|^2 / (2^{j_i+1} n) violated at level " +
                                        std::to_string(i + 1));
        const bool stop = Rational(static_cast<std::int64_t>(nx.set.size())) <=
                          k * Rational(static_cast<std::int64_t>(cur.set.size()));
        SequenceLevel lv;
        lv.set = std::move(nx.set);
        lv.epsilon = eps_next;
        lv.bucket = nx.bucket;
        lv.bucket_pairs = nx.bucket_pairs;
        lv.pair_probability = nx.pair_probability;
        lv.pair_bound_holds = nx.pair_bound_holds;
        lv.size_bound_holds = nx.size_bound_holds;
        st.levels.push_back(std::move(lv));
        if (stop) {
            st.t = i;
            break;
        }
        ensure(i < guard, "run_sequence did not stop");
    }
    st.stop_bound_holds = stopping_index_within_bound(st.t, k, st.dimension);
    ensure(st.stop_bound_holds, "stopping index exceeds ceil(n / log2 K)");
    return st;
}

}  // namespace logrank
