#include <doctest.h>

#include <cmath>

#include "wcount/forms.hpp"
#include "wcount/lattice.hpp"

using namespace wcount;

namespace {

// double-loop oracle, no binary search
u64 count_oracle(const HomogeneousForm& form, u64 x) {
    u64 total = 0;
    u128 target = static_cast<u128>(form.denominator) * x;
    for (u64 m = 1; form.numerator(m, 1) <= target; ++m) {
        for (u64 n = 1; form.numerator(m, n) <= target; ++n) ++total;
    }
    return total;
}

}  // namespace

TEST_CASE("preset forms evaluate the dimension formulas") {
    auto su3 = su3_form();
    CHECK(su3(1, 2) == 3);
    CHECK(su3(1, 2) == dim_su3(1, 2));
    CHECK(su3(4, 7) == dim_su3(4, 7));
    auto so5 = so5_form();
    CHECK(so5(1, 1) == 1);   // 1*1*2*3/6
    CHECK(so5(2, 3) == 40);  // 2*3*5*8/6
}

TEST_CASE("integer-valuedness certificate") {
    // su3 numerator with denominator 5: 1*1*2 = 2 not divisible by 5
    CHECK_THROWS_AS(make_form(3, {0, 1, 1, 0}, 5, "bad"), InvalidForm);
    CHECK_THROWS_AS(make_form(2, {0, 0, 0}, 1, "zero"), InvalidForm);
    CHECK_THROWS_AS(make_form(2, {1, 1}, 1, "short"), InvalidForm);
    CHECK_THROWS_AS(make_form(0, {1}, 1, "deg0"), InvalidForm);
}

TEST_CASE("form parsing") {
    auto f = parse_form("3:2:0,1,1,0");
    CHECK(f(1, 2) == 3);
    CHECK(parse_form("su3")(2, 2) == 8);
    CHECK(parse_form("so5")(1, 1) == 1);
    CHECK_THROWS_AS(parse_form("nonsense"), InvalidForm);
    CHECK_THROWS_AS(parse_form("3:2:0,1,-1,0"), InvalidForm);
    CHECK_THROWS_AS(parse_form("3:5:0,1,1,0"), InvalidForm);
}

TEST_CASE("count_under equals the su(3) summatory count") {
    auto su3 = su3_form();
    CHECK(count_under(su3, 10) == 8);
    for (u64 x = 1; x <= 200; ++x) {
        CAPTURE(x);
        CHECK(count_under(su3, x) == summatory_brute(x));
    }
    CHECK(count_under(su3, 1000000) == summatory_hyperbola(1000000));
}

TEST_CASE("so5 fixtures and oracle sweep") {
    auto so5 = so5_form();
    CHECK(count_under(so5, 1) == 1);
    CHECK(count_under(so5, 100) == 18);
    CHECK(count_under(so5, 10000) == 254);
    for (u64 x = 1; x <= 500; ++x) {
        CAPTURE(x);
        CHECK(count_under(so5, x) == count_oracle(so5, x));
    }
}

TEST_CASE("forms independent of one variable are rejected by count_under") {
    auto f = make_form(2, {1, 0, 0}, 1, "m_squared");
    CHECK_THROWS_AS(count_under(f, 100), InvalidForm);
    auto g = make_form(2, {0, 0, 1}, 1, "n_squared");
    CHECK_THROWS_AS(count_under(g, 100), InvalidForm);
}

TEST_CASE("swapping the variable roles leaves the count invariant") {
    // so5 with coefficients reversed counts the mirrored point set
    auto so5 = so5_form();
    auto mirrored = make_form(4, {0, 2, 3, 1, 0}, 6, "so5_mirror");
    for (u64 x : {10ULL, 100ULL, 1000ULL, 100000ULL}) {
        CAPTURE(x);
        CHECK(count_under(so5, x) == count_under(mirrored, x));
    }
    // a symmetric form equals its own mirror, trivially
    auto sym = make_form(2, {1, 0, 1}, 1, "m2_plus_n2");
    CHECK(count_under(sym, 1000) == count_oracle(sym, 1000));
}

TEST_CASE("homogeneity scaling law") {
    auto su3 = su3_form();
    u64 x = 100000000;
    double ratio = static_cast<double>(count_under(su3, 8 * x)) /
                   static_cast<double>(count_under(su3, x));
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.05));
    auto so5 = so5_form();
    double ratio5 = static_cast<double>(count_under(so5, 16 * x)) /
                    static_cast<double>(count_under(so5, x));
    CHECK(ratio5 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("exponent fit recovers 2/d") {
    std::vector<u64> grid;
    for (int k = 40; k <= 80; k += 4) {
        grid.push_back(static_cast<u64>(std::llround(std::pow(10.0, k / 10.0))));
    }
    auto su3 = exponent_fit(su3_form(), grid);
    CHECK(su3.slope > 0.64);
    CHECK(su3.slope < 0.71);
    CHECK(su3.r_squared > 0.999);
    auto so5 = exponent_fit(so5_form(), grid);
    CHECK(so5.slope > 0.47);
    CHECK(so5.slope < 0.54);
    CHECK_THROWS_AS(exponent_fit(su3_form(), {1000}), UnsupportedParameter);
}
