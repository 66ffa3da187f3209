#include "wcount/witten_zeta.hpp"

#include <cmath>

#include "wcount/asymptotics.hpp"

namespace wcount {

namespace {

void check_args(double s, u64 dim_cutoff) {
    if (!(s >= 1.0)) {
        throw UnsupportedParameter("zeta_su3 supports s >= 1 only (abscissa is 2/3)");
    }
    if (dim_cutoff < 1) throw UnsupportedParameter("dim_cutoff must be >= 1");
}

// Integral-comparison bound on sum over dim > N, using S(t) ~ c1 t^{2/3}:
//   tail <= c1 * s/(s - 2/3) * N^{2/3 - s},  times a safety factor of 2
// because the comparison constant is asymptotic, not uniform.
double tail_bound(double s, u64 dim_cutoff) {
    double c1 = static_cast<double>(constants().c1);
    double n = static_cast<double>(dim_cutoff);
    return 2.0 * c1 * (s / (s - 2.0 / 3.0)) * std::pow(n, 2.0 / 3.0 - s);
}

}  // namespace

ZetaEvaluation zeta_su3_direct(double s, u64 dim_cutoff) {
    check_args(s, dim_cutoff);
    long double sum = 0.0L;
    u64 points = 0;
    for (u64 j = 1; dim_su3(j, 1) <= dim_cutoff; ++j) {
        for (u64 k = 1;; ++k) {
            u64 d = dim_su3(j, k);
            if (d > dim_cutoff) break;
            sum += powl(static_cast<long double>(d), static_cast<long double>(-s));
            ++points;
        }
    }
    return ZetaEvaluation{s, static_cast<double>(sum), tail_bound(s, dim_cutoff), points};
}

ZetaEvaluation zeta_su3_via_rho(double s, u64 dim_cutoff) {
    check_args(s, dim_cutoff);
    auto mult = rho_table(dim_cutoff);
    long double sum = 0.0L;
    u64 points = 0;
    for (u64 n = 1; n <= dim_cutoff; ++n) {
        if (mult[n] == 0) continue;
        sum += static_cast<long double>(mult[n]) *
               powl(static_cast<long double>(n), static_cast<long double>(-s));
        points += mult[n];
    }
    return ZetaEvaluation{s, static_cast<double>(sum), tail_bound(s, dim_cutoff), points};
}

long double residue_su3() { return constants().residue_23; }

}  // namespace wcount
