#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "wcount/intmath.hpp"

namespace wcount {

// Largest x accepted by the summatory routines: keeps 2x and the m^4-scale
// intermediates of the floor evaluation exact in 128 bits.
inline constexpr u64 kMaxSummatoryX = 1000000000000000ULL;  // 1e15

enum class CountMethod { brute, hyperbola };

// Dimension of the irreducible representation indexed by (j,k):
// j*k*(j+k)/2.  The product j*k*(j+k) is always even, so the halving
// is exact.
u64 dim_su3(u64 j, u64 k);

// Number of ordered pairs (j,k) with dim_su3(j,k) == n.
u64 rho(u64 n);

// rho(n) for all n in [0, n_max], computed by a single sweep over the
// lattice (rho_table[0] is unused and set to 0).
std::vector<std::uint32_t> rho_table(u64 n_max);

// Largest n >= 0 with m*n*(m+n) <= 2x, by exact integer binary search on
// the cubic.  Never uses a floating square root: misrounding at lattice
// points would break exactness.
u64 max_n_for_m(u64 m, u64 x);

// S(x) = #{(m,n) : m,n >= 1, m*n*(m+n) <= 2x} by unit-increment scan.
// Cost Theta(x^{2/3}) lattice points; throws BudgetExceeded past the cap.
u64 summatory_brute(u64 x, u64 max_points = 200000000ULL);

// Same count via the hyperbola method:
//   2 * sum_{1<=n<=cbrt(x)} max_n_for_m(n, x)  -  floor(cbrt(x))^2
// Cost Theta(x^{1/3} log x).
u64 summatory_hyperbola(u64 x);

// Classical Dirichlet divisor sum: sum_{n<=x} d(n) by the hyperbola method.
u64 divisor_summatory(u64 x);

// Exact coefficients r(0..n_max) of prod_{d>=1} (1-q^d)^{-rho(d)}.
// Coefficients grow superpolynomially, hence arbitrary precision.
std::vector<mpz_class> rep_count_r(u64 n_max);

}  // namespace wcount
