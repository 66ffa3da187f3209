#include "wcount/grid.hpp"

#include <algorithm>
#include <cmath>

namespace wcount {

std::vector<u64> make_grid(const GridSpec& spec) {
    if (spec.x_min < 1 || spec.x_min >= spec.x_max || spec.points_per_decade < 1) {
        throw UnsupportedParameter("grid requires 1 <= x_min < x_max and points_per_decade >= 1");
    }
    const double ppd = static_cast<double>(spec.points_per_decade);
    const long k_lo = std::lround(std::ceil(ppd * std::log10(static_cast<double>(spec.x_min)) - 1e-9));
    const long k_hi = std::lround(std::floor(ppd * std::log10(static_cast<double>(spec.x_max)) + 1e-9));
    std::vector<u64> grid;
    grid.push_back(spec.x_min);
    for (long k = k_lo; k <= k_hi; ++k) {
        double v = std::pow(10.0, static_cast<double>(k) / ppd);
        u64 x = static_cast<u64>(std::llround(v));
        if (x >= spec.x_min && x <= spec.x_max) grid.push_back(x);
    }
    grid.push_back(spec.x_max);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

}  // namespace wcount
