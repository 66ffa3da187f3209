#pragma once

#include <cstdint>
#include <functional>

#include "wcount/intmath.hpp"

namespace wcount {

struct QuadratureResult {
    double value;
    double error_estimate;
    std::uint64_t subdivisions;
};

struct FExpansionCheck {
    double y;
    double F_y;
    double deviation;  // F(y) - F(0) - 2 sqrt(y)
};

// Adaptive Gauss-Kronrod (G7,K15) integration on [a,b].  Deterministic
// for fixed inputs; throws ToleranceNotMet past max_subdivisions with the
// best estimate attached.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double tol = 1e-12,
                           std::uint64_t max_subdivisions = 1000000);

// F(y) = int_y^{1/2} (2 t^{5/2} - t^{-1/2}) / sqrt(1 + t^3) dt.
// At y = 0 the t^{-1/2} singularity is removed by t = u^2, integrating
// (4u^6 - 2)/sqrt(1 + u^6) over [0, 1/sqrt(2)].
double eval_F(double y);

// F(y) via the substituted integrand (4u^6 - 2)/sqrt(1 + u^6) over
// [sqrt(y), 1/sqrt(2)]; agrees with eval_F and is the route used at y = 0.
double eval_F_substituted(double y);

// 3/4 - 2^{2/3} sqrt(3) Gamma(1/3)^3 / (8 pi), equivalently 3/4 - c1/2.
double identity_rhs();

// Checks F(y) = F(0) + 2 sqrt(y) + O(y^{7/2}).  The deviation is computed
// as a single integral over [0, y] of the remainder integrand; the naive
// difference of two quadratures would drown in cancellation below 1e-12.
FExpansionCheck f_expansion_check(double y);

// zeta(1/2) via  -1 - (1/2) int_1^inf {t} t^{-3/2} dt, with the integral
// over [1,T] summed from exact per-interval antiderivatives and the tail
// approximated by T^{-1/2} ({t} ~ 1/2 on average; the oscillating part
// contributes O(T^{-3/2})).
double zeta_half_integral(u64 T);

}  // namespace wcount
