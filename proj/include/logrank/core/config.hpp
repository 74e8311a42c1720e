#pragma once

#include <cstddef>

namespace logrank {

// Runtime knobs shared by all modules.
struct Config {
    // Dense 2^n tables (indicator vectors, transforms) are used up to this n.
    int dense_cap = 20;
    // Subset-enumeration oracles refuse inputs whose enumerated side exceeds this.
    std::size_t exact_cap = 20;
    // Largest dimension accepted by generators and parsers.
    int dimension_cap = 24;
};

}  // namespace logrank
