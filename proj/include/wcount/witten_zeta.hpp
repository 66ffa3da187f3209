#pragma once

#include "wcount/lattice.hpp"

namespace wcount {

// Partial evaluation of zeta_su3(s) = sum_{j,k>=1} (jk(j+k)/2)^{-s}.
// All terms are positive, so the true value lies in
// [partial_sum, partial_sum + tail_bound].
struct ZetaEvaluation {
    double s;
    double partial_sum;
    double tail_bound;
    u64 points_included;
};

// Sums over all pairs (j,k) with dimension <= dim_cutoff, enumerated in
// pair order (j outer, k inner).  Restricted to real s >= 1 so the
// integral-comparison tail bound stays usable; the abscissa is 2/3.
ZetaEvaluation zeta_su3_direct(double s, u64 dim_cutoff);

// Same point set summed by dimension: sum_{n<=cutoff} rho(n) n^{-s}.
// Must agree with zeta_su3_direct up to floating reassociation.
ZetaEvaluation zeta_su3_via_rho(double s, u64 dim_cutoff);

// Res_{s=2/3} zeta_su3(s) = 2^{2/3} Gamma(1/3)^3 / (2 pi sqrt(3)),
// from the frozen constant table; equals (2/3)*c1.
long double residue_su3();

}  // namespace wcount
