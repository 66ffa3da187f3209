#pragma once

#include <string>
#include <vector>

#include "wcount/lattice.hpp"

namespace wcount {

// Closed-form constants of the two-term expansion
//   S(x) = c1*x^{2/3} + c2*sqrt(x) + O(x^{1/3}).
// Values are frozen decimal literals produced by an independent
// high-precision computation (mpmath, 50 digits) before the build; the
// decimal strings keep the full 40 digits for cross-checks beyond long
// double precision.
struct AsymptoticConstants {
    long double gamma_one_third;  // Gamma(1/3)
    long double zeta_half;        // zeta(1/2)
    long double euler_gamma;      // Euler-Mascheroni gamma
    long double c1;               // 2^{2/3} sqrt(3) Gamma(1/3)^3 / (4 pi)
    long double c2;               // 2^{3/2} zeta(1/2)
    long double residue_23;       // 2^{2/3} Gamma(1/3)^3 / (2 pi sqrt(3))

    const char* gamma_one_third_str;
    const char* zeta_half_str;
    const char* euler_gamma_str;
    const char* c1_str;
    const char* c2_str;
    const char* residue_23_str;
    const char* provenance;
};

const AsymptoticConstants& constants();

// One diagnostic row: exact count vs. the two main terms.
struct SummatoryRecord {
    u64 x;
    u64 exact_count;
    long double main_term_23;     // c1 * x^{2/3}
    long double main_term_12;     // c2 * x^{1/2}
    long double residual;         // exact - main_23 - main_12
    long double scaled_residual;  // residual * x^{-1/3}
    const char* precision;        // accumulation mode, "extended" = long double
};

// c1*x^{2/3} + c2*sqrt(x).
long double main_terms(long double x);

// Exact counts on a strictly increasing grid, with residual diagnostics.
// Grid sweeps run in parallel; WITTEN_COUNT_THREADS caps the worker count.
std::vector<SummatoryRecord> residual_series(const std::vector<u64>& x_grid,
                                             CountMethod method);

SummatoryRecord residual_at(u64 x, CountMethod method);

// (D(x) - x ln x - (2 gamma - 1) x) / sqrt(x) for the divisor baseline.
long double divisor_residual(u64 x);

}  // namespace wcount
