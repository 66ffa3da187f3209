#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include <mpfr.h>

#include "wcount/asymptotics.hpp"
#include "wcount/grid.hpp"

using namespace wcount;

TEST_CASE("frozen constants match independent oracle values") {
    const auto& c = constants();
    CHECK(static_cast<double>(c.euler_gamma) ==
          doctest::Approx(0.57721566490153286).epsilon(1e-15));
    CHECK(static_cast<double>(c.zeta_half) ==
          doctest::Approx(-1.46035450880958681).epsilon(1e-15));
    CHECK(static_cast<double>(c.gamma_one_third) ==
          doctest::Approx(2.67893853470774763).epsilon(1e-15));
    CHECK(c.c2 < 0.0L);
    // literals agree with their own decimal strings
    CHECK(strtold(c.c1_str, nullptr) == c.c1);
    CHECK(strtold(c.residue_23_str, nullptr) == c.residue_23);
    CHECK(strtold(c.zeta_half_str, nullptr) == c.zeta_half);
}

TEST_CASE("Tauberian relation c1 = (3/2) residue to better than 25 digits") {
    // checked on the 40-digit decimal strings at 256-bit precision, beyond
    // what long double can represent
    const auto& c = constants();
    mpfr_t c1, res, diff;
    mpfr_inits2(256, c1, res, diff, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_str(c1, c.c1_str, 10, MPFR_RNDN);
    mpfr_set_str(res, c.residue_23_str, 10, MPFR_RNDN);
    mpfr_mul_d(res, res, 1.5, MPFR_RNDN);
    mpfr_sub(diff, c1, res, MPFR_RNDN);
    mpfr_div(diff, diff, c1, MPFR_RNDN);
    mpfr_abs(diff, diff, MPFR_RNDN);
    CHECK(mpfr_cmp_d(diff, 1e-30) < 0);
    mpfr_clears(c1, res, diff, static_cast<mpfr_ptr>(nullptr));
}

TEST_CASE("main_terms values") {
    const auto& c = constants();
    CHECK(static_cast<double>(main_terms(1.0L)) ==
          doctest::Approx(0.076040011513928417).epsilon(1e-13));
    CHECK(static_cast<double>(main_terms(1e6L)) ==
          doctest::Approx(static_cast<double>(c.c1 * 1e4L + c.c2 * 1e3L)).epsilon(1e-15));
    CHECK_THROWS_AS(main_terms(0.5L), UnsupportedParameter);
}

TEST_CASE("main_terms positive on the whole grid") {
    auto grid = make_grid({1, 10000000000ULL, 5});
    for (u64 x : grid) {
        CAPTURE(x);
        CHECK(main_terms(static_cast<long double>(x)) > 0.0L);
    }
}

TEST_CASE("residual_at small fixtures") {
    auto r1 = residual_at(1, CountMethod::brute);
    CHECK(r1.exact_count == 1);
    CHECK(static_cast<double>(r1.residual) ==
          doctest::Approx(1.0 - 0.076040011513928417).epsilon(1e-12));
    CHECK(static_cast<double>(r1.scaled_residual) ==
          doctest::Approx(static_cast<double>(r1.residual)).epsilon(1e-15));
    auto r10 = residual_at(10, CountMethod::hyperbola);
    CHECK(r10.exact_count == 8);
    CHECK(r10.precision == std::string("extended"));
}

TEST_CASE("residual_series is deterministic and ordered") {
    auto grid = make_grid({100, 100000, 10});
    auto a = residual_series(grid, CountMethod::hyperbola);
    auto b = residual_series(grid, CountMethod::hyperbola);
    REQUIRE(a.size() == grid.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].x == grid[i]);
        CHECK(a[i].exact_count == b[i].exact_count);
        CHECK(static_cast<double>(a[i].scaled_residual) ==
              static_cast<double>(b[i].scaled_residual));
    }
}

TEST_CASE("residual_series brute and hyperbola give identical counts") {
    auto grid = make_grid({10, 100000, 5});
    auto brute = residual_series(grid, CountMethod::brute);
    auto hyper = residual_series(grid, CountMethod::hyperbola);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CAPTURE(grid[i]);
        CHECK(brute[i].exact_count == hyper[i].exact_count);
    }
}

TEST_CASE("residual_series rejects non-increasing grids") {
    CHECK_THROWS_AS(residual_series({10, 10, 20}, CountMethod::brute),
                    UnsupportedParameter);
    CHECK_THROWS_AS(residual_series({30, 20}, CountMethod::brute),
                    UnsupportedParameter);
}

TEST_CASE("divisor residual stays within the sqrt(x) band") {
    CHECK(static_cast<double>(divisor_residual(1)) ==
          doctest::Approx(0.845568670196934279).epsilon(1e-12));
    for (u64 x : {100ULL, 10000ULL, 1000000ULL}) {
        CAPTURE(x);
        CHECK(std::abs(static_cast<double>(divisor_residual(x))) < 4.0);
    }
}
