#pragma once

#include "logrank/approxdual/dual_pair.hpp"
#include "logrank/f2core/spectrum.hpp"

#include <map>

namespace logrank {

struct SmallSpanResult {
    DualPair pair;
    std::uint64_t span_size = 0;
    std::size_t classes = 0;
    // Reference bounds for sets with small span, recorded for comparison only:
    // eps^2/4 (|A|/|span A|)|B| in general, eps^2 (|A|/|span A|)|B| inside Spec_eps.
    Rational reference_bound_general;
    Rational reference_bound_in_spectrum;
    // What the class construction guarantees: (eps/2) |B| / |span A|.
    Rational guaranteed_b;
};

// B is split by the functional b -> (<v,b>)_{v in basis(span A)}; inside one
// class every member of span A has a fixed inner product with every b. The
// class maximising (majority side of A) x (class size) wins, so |A'| >= |A|/2
// and |B'| >= |B| / (2 |span A|).
inline SmallSpanResult small_span_dual(const F2Set& a, const F2Set& b, const Rational& eps, const Config& cfg = {}) {
    a.same_dimension(b);
    if (a.empty() || b.empty()) throw InvalidArgument("small_span_dual on an empty set");
    if (eps <= 0) throw InvalidArgument("small_span_dual needs eps > 0");
    if (restrict_to_spectrum(a, b, eps, cfg).size() != a.size())
        throw InvalidArgument("small_span_dual: A is not inside Spec_eps(B)");

    const auto gens = basis_of(a).vectors();
    std::map<Word, std::vector<Word>> classes;
    for (Word y : b) {
        Word pattern = 0;
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (inner_product(gens[k], y)) pattern |= Word{1} << k;
        classes[pattern].push_back(y);
    }

    std::size_t best_area = 0, best_class = 0;
    int best_bit = 0;
    Word best_rep = 0;
    const std::vector<Word>* best_members = nullptr;
    for (const auto& [pattern, members] : classes) {
        const Word rep = members.front();
        std::size_t ones = 0;
        for (Word x : a) ones += static_cast<std::size_t>(inner_product(x, rep));
        const std::size_t zeros = a.size() - ones;
        const int bit = ones > zeros ? 1 : 0;
        const std::size_t area = std::max(ones, zeros) * members.size();
        const bool better = best_members == nullptr || area > best_area ||
                            (area == best_area && (members.size() > best_class ||
                                                   (members.size() == best_class && rep < best_rep)));
        if (better) {
            best_area = area;
            best_class = members.size();
            best_bit = bit;
            best_rep = rep;
            best_members = &members;
        }
    }
    F2Set a_side = a.filter([&](Word x) { return inner_product(x, best_rep) == best_bit; });
    F2Set b_side(a.dimension(), *best_members);

    const std::uint64_t span = std::uint64_t{1} << gens.size();
    const Rational ratio = make_rational(static_cast<std::int64_t>(a.size()), static_cast<std::int64_t>(span));
    const Rational b_size(static_cast<std::int64_t>(b.size()));
    SmallSpanResult res{DualPair::make(std::move(a_side), std::move(b_side)), span, classes.size(),
                        Rational(eps * eps / 4 * ratio * b_size), Rational(eps * eps * ratio * b_size),
                        Rational(eps / 2 * b_size / Rational(static_cast<std::int64_t>(span)))};
    ensure(2 * res.pair.a().size() >= a.size(), "small_span_dual: |A'| < |A|/2");
    ensure(Rational(static_cast<std::int64_t>(res.pair.b().size())) >= res.guaranteed_b,
           "small_span_dual: |B'| below (eps/2)|B|/|span A|");
    return res;
}

}  // namespace logrank
