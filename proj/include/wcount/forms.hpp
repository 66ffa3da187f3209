#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wcount/intmath.hpp"

namespace wcount {

// Integer-valued homogeneous binary form
//   p(m,n) = (a_0 m^d + a_1 m^{d-1} n + ... + a_d n^d) / D
// with nonnegative integer coefficients.  Nonnegativity forces
// monotonicity in each variable on the positive orthant, which the
// counting binary search relies on.  Integer-valuedness is certified on
// the finite grid 1 <= m,n <= 2D+d at construction (the numerator mod D
// is periodic in each variable with period dividing D).
struct HomogeneousForm {
    unsigned degree;
    std::vector<u64> coefficients;  // a_0..a_d
    u64 denominator;
    std::string name;

    // exact numerator sum a_i m^{d-i} n^i; throws on 128-bit overflow
    u128 numerator(u64 m, u64 n) const;
    // p(m,n); numerator is divisible by D by construction
    u64 operator()(u64 m, u64 n) const;
};

HomogeneousForm make_form(unsigned degree, std::vector<u64> coefficients,
                          u64 denominator, std::string name);

// mn(m+n)/2
HomogeneousForm su3_form();
// mn(m+n)(m+2n)/6
HomogeneousForm so5_form();

// Parses "d:D:a_0,a_1,...,a_d", or the preset names "su3" / "so5".
HomogeneousForm parse_form(const std::string& text);

// #{(m,n) : m,n >= 1, p(m,n) <= x}: per-m binary search on the largest n
// with numerator <= D*x, all in exact integer arithmetic.
u64 count_under(const HomogeneousForm& form, u64 x);

// Least-squares fit of log(count) against log(x); slope estimates the
// growth exponent (2/d by homogeneity).
struct ExponentFit {
    double slope;
    double intercept;
    double r_squared;
    std::vector<std::pair<u64, u64>> grid;  // (x, count)
};

ExponentFit exponent_fit(const HomogeneousForm& form, const std::vector<u64>& x_grid);

}  // namespace wcount
