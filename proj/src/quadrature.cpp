#include "wcount/quadrature.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "wcount/asymptotics.hpp"

namespace wcount {

namespace {

// G7/K15 nodes and weights on [-1,1] (positive half; QUADPACK values).
constexpr double kXgk[8] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
constexpr double kWg[4] = {0.12948496616886969327, 0.27970539148927666790,
                           0.38183005050511894495, 0.41795918367346938776};

struct Panel {
    double a, b;
    double value;
    double error;
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double fc = f(mid);
    double kronrod = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fsum = f(mid - dx) + f(mid + dx);
        kronrod += kWgk[i] * fsum;
        if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    return Panel{a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double tol,
                           std::uint64_t max_subdivisions) {
    if (!(a < b)) throw UnsupportedParameter("integrate requires a < b");
    if (!(tol > 0.0)) throw UnsupportedParameter("integrate requires tol > 0");
    const double span = b - a;
    std::vector<Panel> work{gauss_kronrod(f, a, b)};
    double accepted_value = 0.0, accepted_error = 0.0;
    std::uint64_t subdivisions = 0;
    while (!work.empty()) {
        Panel p = work.back();
        work.pop_back();
        // local budget proportional to panel length keeps the total <= tol
        if (p.error <= tol * (p.b - p.a) / span || p.error == 0.0) {
            accepted_value += p.value;
            accepted_error += p.error;
            continue;
        }
        if (++subdivisions > max_subdivisions) {
            double best = accepted_value + p.value;
            double err = accepted_error + p.error;
            for (const Panel& q : work) {
                best += q.value;
                err += q.error;
            }
            throw ToleranceNotMet("integrate: tolerance not met after " +
                                      std::to_string(max_subdivisions) +
                                      " subdivisions",
                                  best, err);
        }
        const double mid = 0.5 * (p.a + p.b);
        work.push_back(gauss_kronrod(f, p.a, mid));
        work.push_back(gauss_kronrod(f, mid, p.b));
    }
    return QuadratureResult{accepted_value, accepted_error, subdivisions};
}

double eval_F(double y) {
    if (y < 0.0 || y > 0.5) throw UnsupportedParameter("eval_F requires 0 <= y <= 1/2");
    if (y == 0.5) return 0.0;
    if (y == 0.0) return eval_F_substituted(0.0);
    auto f = [](double t) {
        return (2.0 * t * t * std::sqrt(t) - 1.0 / std::sqrt(t)) /
               std::sqrt(1.0 + t * t * t);
    };
    return integrate(f, y, 0.5, 1e-13).value;
}

double eval_F_substituted(double y) {
    if (y < 0.0 || y > 0.5) throw UnsupportedParameter("eval_F requires 0 <= y <= 1/2");
    if (y == 0.5) return 0.0;
    auto g = [](double u) {
        double u6 = u * u * u * u * u * u;
        return (4.0 * u6 - 2.0) / std::sqrt(1.0 + u6);
    };
    return integrate(g, std::sqrt(y), 1.0 / std::sqrt(2.0), 1e-13).value;
}

double identity_rhs() {
    return static_cast<double>(0.75L - constants().c1 / 2.0L);
}

FExpansionCheck f_expansion_check(double y) {
    if (!(y > 0.0 && y <= 0.01)) {
        throw UnsupportedParameter("f_expansion_check requires 0 < y <= 0.01");
    }
    // Remainder of F(y) - F(0) - 2 sqrt(y) as one integral over [0, sqrt(y)]
    // after t = u^2; the bracket sqrt(1+u^6) - 1 is expanded as
    // u^6/(sqrt(1+u^6)+1) to dodge cancellation.
    auto rem = [](double u) {
        double u6 = u * u * u * u * u * u;
        double root = std::sqrt(1.0 + u6);
        return 2.0 * u6 * (2.0 + 1.0 / (root + 1.0)) / root;
    };
    double s = std::sqrt(y);
    double tol = std::max(1e-22, 1e-4 * std::pow(y, 3.5));
    double deviation = -integrate(rem, 0.0, s, tol).value;
    return FExpansionCheck{y, eval_F(y), deviation};
}

double zeta_half_integral(u64 T) {
    if (T < 10) throw UnsupportedParameter("zeta_half_integral requires T >= 10");
    long double sum = 0.0L;
    for (u64 k = 1; k < T; ++k) {
        // exact antiderivative of (t-k) t^{-3/2} over [k, k+1], rearranged
        // into a cancellation-free product form
        long double kl = static_cast<long double>(k);
        long double sk = sqrtl(kl);
        long double sk1 = sqrtl(kl + 1.0L);
        long double skk1 = sqrtl(kl * (kl + 1.0L));
        sum += 2.0L * kl / ((sk1 + sk) * (skk1 + kl) * skk1);
    }
    long double tail = 1.0L / sqrtl(static_cast<long double>(T));
    return static_cast<double>(-1.0L - 0.5L * (sum + tail));
}

}  // namespace wcount
