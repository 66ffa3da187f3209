#pragma once

#include <cstdint>

#include "wcount/errors.hpp"

namespace wcount {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// floor(sqrt(x)) by Newton iteration on integers with a correction loop.
// Float sqrt misrounds near perfect squares for large x, so the float value
// is only a starting guess.
inline u64 isqrt(u64 x) {
    if (x == 0) return 0;
    u64 r = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(x)));
    while (r > 0 && static_cast<u128>(r) * r > x) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

// floor(cbrt(x)), same strategy.
inline u64 icbrt(u64 x) {
    if (x == 0) return 0;
    u64 r = static_cast<u64>(__builtin_cbrtl(static_cast<long double>(x)));
    if (r > 1) r -= 1;
    while (static_cast<u128>(r + 1) * (r + 1) * (r + 1) <= x) ++r;
    while (r > 0 && static_cast<u128>(r) * r * r > x) --r;
    return r;
}

// j*k*(j+k) as an exact 128-bit product; throws if the final multiply
// would overflow 128 bits.
inline u128 pair_product(u64 j, u64 k) {
    u128 jk = static_cast<u128>(j) * k;
    u128 s = static_cast<u128>(j) + k;
    if (jk != 0 && s > static_cast<u128>(~static_cast<u128>(0)) / jk) {
        throw ArithmeticOverflow("j*k*(j+k) exceeds 128 bits");
    }
    return jk * s;
}

}  // namespace wcount
