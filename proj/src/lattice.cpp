#include "wcount/lattice.hpp"

#include <string>

namespace wcount {

u64 dim_su3(u64 j, u64 k) {
    if (j < 1 || k < 1) throw UnsupportedParameter("dim_su3 requires j,k >= 1");
    u128 p = pair_product(j, k);
    u128 d = p / 2;  // p is even: among j, k, j+k at least one is even
    if (d > static_cast<u128>(~0ULL)) {
        throw ArithmeticOverflow("dimension exceeds 64 bits");
    }
    return static_cast<u64>(d);
}

u64 rho(u64 n) {
    if (n < 1) throw UnsupportedParameter("rho requires n >= 1");
    const u128 target = static_cast<u128>(n) * 2;
    u64 count = 0;
    // j is the smaller index: j <= k forces j*k*(j+k) >= 2j^3.
    for (u64 j = 1; static_cast<u128>(j) * j * j * 2 <= target; ++j) {
        // smallest k >= j with j*k*(j+k) >= 2n
        u64 lo = j, hi = isqrt(2 * n) + 1;
        while (lo < hi) {
            u64 mid = lo + (hi - lo) / 2;
            if (pair_product(j, mid) < target) lo = mid + 1;
            else hi = mid;
        }
        if (pair_product(j, lo) == target) count += (lo == j) ? 1 : 2;
    }
    return count;
}

std::vector<std::uint32_t> rho_table(u64 n_max) {
    std::vector<std::uint32_t> table(n_max + 1, 0);
    for (u64 j = 1; j * (j + 1) / 2 <= n_max; ++j) {
        for (u64 k = 1;; ++k) {
            u64 d = dim_su3(j, k);
            if (d > n_max) break;
            ++table[d];
        }
    }
    return table;
}

u64 max_n_for_m(u64 m, u64 x) {
    if (m < 1 || x < 1) throw UnsupportedParameter("max_n_for_m requires m,x >= 1");
    if (x > kMaxSummatoryX) throw ArithmeticOverflow("x exceeds supported range 1e15");
    const u128 target = static_cast<u128>(x) * 2;
    if (pair_product(m, 1) > target) return 0;
    // n <= sqrt(2x) since m*n*(m+n) >= n^2
    u64 lo = 1, hi = isqrt(2 * x) + 1;
    // invariant: product(lo) <= 2x < product(hi)
    while (pair_product(m, hi) <= target) ++hi;
    while (hi - lo > 1) {
        u64 mid = lo + (hi - lo) / 2;
        if (pair_product(m, mid) <= target) lo = mid;
        else hi = mid;
    }
    return lo;
}

u64 summatory_brute(u64 x, u64 max_points) {
    if (x < 1) throw UnsupportedParameter("summatory_brute requires x >= 1");
    if (x > kMaxSummatoryX) throw ArithmeticOverflow("x exceeds supported range 1e15");
    const u128 target = static_cast<u128>(x) * 2;
    u64 total = 0;
    for (u64 m = 1; pair_product(m, 1) <= target; ++m) {
        for (u64 n = 1; pair_product(m, n) <= target; ++n) {
            if (++total > max_points) {
                throw BudgetExceeded("summatory_brute: point budget of " +
                                     std::to_string(max_points) + " exceeded");
            }
        }
    }
    return total;
}

u64 summatory_hyperbola(u64 x) {
    if (x < 1) throw UnsupportedParameter("summatory_hyperbola requires x >= 1");
    if (x > kMaxSummatoryX) throw ArithmeticOverflow("x exceeds supported range 1e15");
    const u64 c = icbrt(x);
    u64 total = 0;
    for (u64 n = 1; n <= c; ++n) total += max_n_for_m(n, x);
    return 2 * total - c * c;
}

u64 divisor_summatory(u64 x) {
    if (x < 1) throw UnsupportedParameter("divisor_summatory requires x >= 1");
    const u64 s = isqrt(x);
    u64 total = 0;
    for (u64 n = 1; n <= s; ++n) total += x / n;
    return 2 * total - s * s;
}

std::vector<mpz_class> rep_count_r(u64 n_max) {
    std::vector<mpz_class> r(n_max + 1, 0);
    r[0] = 1;
    if (n_max == 0) return r;
    auto mult = rho_table(n_max);
    // one geometric factor (1-q^d)^{-1} per color of each dimension d
    for (u64 d = 1; d <= n_max; ++d) {
        for (std::uint32_t c = 0; c < mult[d]; ++c) {
            for (u64 i = d; i <= n_max; ++i) r[i] += r[i - d];
        }
    }
    return r;
}

}  // namespace wcount
