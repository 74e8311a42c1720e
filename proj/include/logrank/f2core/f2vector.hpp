#pragma once

#include "logrank/core/error.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace logrank {

using Word = std::uint32_t;

inline constexpr int kMaxDimension = 32;

inline Word dimension_mask(int n) {
    return n >= 32 ? ~Word{0} : ((Word{1} << n) - 1);
}

inline void check_dimension(int n) {
    if (n < 1 || n > kMaxDimension)
        throw InvalidArgument("dimension must lie in [1, " + std::to_string(kMaxDimension) +
                              "], got " + std::to_string(n));
}

// Element of F_2^n; coordinate i is bit i of the word.
class F2Vector {
public:
    F2Vector(int n, Word bits) : n_(n), bits_(bits) {
        check_dimension(n);
        if ((bits & ~dimension_mask(n)) != 0)
            throw InvalidArgument("vector has bits set above dimension " + std::to_string(n));
    }

    static F2Vector zero(int n) { return F2Vector(n, 0); }

    // Most significant coordinate first: "110" is coordinates (2,1,0) = (1,1,0).
    static F2Vector parse(std::string_view text) {
        const int n = static_cast<int>(text.size());
        check_dimension(n);
        Word bits = 0;
        for (char c : text) {
            if (c != '0' && c != '1') throw ParseError("vector literal must be 0/1 characters");
            bits = (bits << 1) | static_cast<Word>(c - '0');
        }
        return F2Vector(n, bits);
    }

    int dimension() const { return n_; }
    Word bits() const { return bits_; }
    bool bit(int i) const { return (bits_ >> i) & 1U; }
    int weight() const { return std::popcount(bits_); }

    std::string str() const {
        std::string out(static_cast<std::size_t>(n_), '0');
        for (int i = 0; i < n_; ++i)
            if (bit(i)) out[static_cast<std::size_t>(n_ - 1 - i)] = '1';
        return out;
    }

    F2Vector operator+(const F2Vector& other) const {
        if (other.n_ != n_) throw DimensionMismatch("vector addition across dimensions");
        return F2Vector(n_, bits_ ^ other.bits_);
    }

    friend bool operator==(const F2Vector&, const F2Vector&) = default;
    friend auto operator<=>(const F2Vector&, const F2Vector&) = default;

private:
    int n_;
    Word bits_;
};

inline int inner_product(Word a, Word b) {
    return std::popcount(a & b) & 1;
}

inline int inner_product(const F2Vector& a, const F2Vector& b) {
    if (a.dimension() != b.dimension())
        throw DimensionMismatch("inner product of vectors in F_2^" + std::to_string(a.dimension()) +
                                " and F_2^" + std::to_string(b.dimension()));
    return inner_product(a.bits(), b.bits());
}

}  // namespace logrank
