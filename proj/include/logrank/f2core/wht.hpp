#pragma once

#include "logrank/core/error.hpp"

#include <bit>
#include <span>
#include <vector>

namespace logrank {

// In-place Walsh-Hadamard butterfly: g(x) = sum_y f(y) (-1)^<x,y>.
// Unnormalised, so applying it twice multiplies by the table length.
template <typename T>
void wht(std::span<T> table) {
    const std::size_t len = table.size();
    if (len == 0 || !std::has_single_bit(len))
        throw InvalidArgument("Walsh-Hadamard table length must be a power of two");
    for (std::size_t half = 1; half < len; half <<= 1) {
        for (std::size_t block = 0; block < len; block += half << 1) {
            for (std::size_t i = block; i < block + half; ++i) {
                const T u = table[i];
                const T v = table[i + half];
                table[i] = u + v;
                table[i + half] = u - v;
            }
        }
    }
}

template <typename T>
std::vector<T> wht_copy(std::vector<T> table) {
    wht(std::span<T>(table));
    return table;
}

}  // namespace logrank
