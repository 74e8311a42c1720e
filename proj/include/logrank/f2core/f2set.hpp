#pragma once

#include "logrank/f2core/f2vector.hpp"

#include <algorithm>
#include <initializer_list>
#include <span>
#include <vector>

namespace logrank {

// Subset of F_2^n stored as sorted distinct words (ascending integer value is
// the canonical order used for every output).
class F2Set {
public:
    explicit F2Set(int n) : n_(n) { check_dimension(n); }

    F2Set(int n, std::vector<Word> words) : n_(n), words_(std::move(words)) {
        check_dimension(n);
        const Word mask = dimension_mask(n);
        for (Word w : words_)
            if ((w & ~mask) != 0) throw InvalidArgument("set member exceeds dimension");
        std::sort(words_.begin(), words_.end());
        words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    }

    F2Set(int n, std::initializer_list<Word> words) : F2Set(n, std::vector<Word>(words)) {}

    static F2Set from_vectors(int n, const std::vector<F2Vector>& vs) {
        std::vector<Word> words;
        words.reserve(vs.size());
        for (const auto& v : vs) {
            if (v.dimension() != n) throw DimensionMismatch("set member has wrong dimension");
            words.push_back(v.bits());
        }
        return F2Set(n, std::move(words));
    }

    // Already sorted and distinct; skips the normalisation pass.
    static F2Set from_sorted(int n, std::vector<Word> words) {
        F2Set s(n);
        s.words_ = std::move(words);
        return s;
    }

    static F2Set full(int n) {
        std::vector<Word> words(std::size_t{1} << n);
        for (std::size_t i = 0; i < words.size(); ++i) words[i] = static_cast<Word>(i);
        return from_sorted(n, std::move(words));
    }

    int dimension() const { return n_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    std::span<const Word> words() const { return words_; }
    Word operator[](std::size_t i) const { return words_[i]; }
    auto begin() const { return words_.begin(); }
    auto end() const { return words_.end(); }

    bool contains(Word w) const { return std::binary_search(words_.begin(), words_.end(), w); }
    bool contains(const F2Vector& v) const { return v.dimension() == n_ && contains(v.bits()); }

    std::vector<F2Vector> vectors() const {
        std::vector<F2Vector> out;
        out.reserve(words_.size());
        for (Word w : words_) out.emplace_back(n_, w);
        return out;
    }

    bool is_subset_of(const F2Set& other) const {
        return n_ == other.n_ &&
               std::includes(other.words_.begin(), other.words_.end(), words_.begin(), words_.end());
    }

    F2Set intersect(const F2Set& other) const {
        same_dimension(other);
        std::vector<Word> out;
        std::set_intersection(words_.begin(), words_.end(), other.words_.begin(), other.words_.end(),
                              std::back_inserter(out));
        return from_sorted(n_, std::move(out));
    }

    F2Set unite(const F2Set& other) const {
        same_dimension(other);
        std::vector<Word> out;
        std::set_union(words_.begin(), words_.end(), other.words_.begin(), other.words_.end(),
                       std::back_inserter(out));
        return from_sorted(n_, std::move(out));
    }

    template <typename Pred>
    F2Set filter(Pred&& keep) const {
        std::vector<Word> out;
        for (Word w : words_)
            if (keep(w)) out.push_back(w);
        return from_sorted(n_, std::move(out));
    }

    void same_dimension(const F2Set& other) const {
        if (other.n_ != n_)
            throw DimensionMismatch("sets live in F_2^" + std::to_string(n_) + " and F_2^" +
                                    std::to_string(other.n_));
    }

    friend bool operator==(const F2Set&, const F2Set&) = default;

private:
    int n_;
    std::vector<Word> words_;
};

}  // namespace logrank
