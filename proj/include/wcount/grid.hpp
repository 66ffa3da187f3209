#pragma once

#include <vector>

#include "wcount/intmath.hpp"

namespace wcount {

struct GridSpec {
    u64 x_min;
    u64 x_max;
    unsigned points_per_decade;
};

// Geometric grid between x_min and x_max inclusive, rounded to integers,
// deduplicated, strictly increasing.
std::vector<u64> make_grid(const GridSpec& spec);

}  // namespace wcount
