#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace expsolve;
using testutil::matches_printed;

TEST_CASE("named constants round to their known digits") {
    Precision p;
    CHECK(matches_printed(constant(Constant::e, p), "2.71828"));
    CHECK(matches_printed(constant(Constant::inv_e, p), "0.36787"));
    CHECK(matches_printed(constant(Constant::e_to_e, p), "15.15426"));
    CHECK(matches_printed(constant(Constant::e_to_minus_e, p), "0.06598"));
    CHECK(matches_printed(constant(Constant::e_to_inv_e, p), "1.44466"));
    CHECK(matches_printed(constant(Constant::e_to_minus_inv_e, p), "0.69220"));
    CHECK(constant(Constant::e, p).prec() == 128);
}

TEST_CASE("rpow behaves like exact powers where they exist") {
    Precision p;
    long w = p.working();
    Real two = Real::of(2L, w), four = Real::of(4L, w);
    CHECK(pow(two, four) == Real::of(16L, w));
    CHECK(pow(four, Real::of(Rational(1, 2), w)) == two);
    Real rt2 = sqrt(two);
    CHECK(testutil::approx(pow(rt2, two), two, pow2(-(p.bits - p.guard), w)));
    CHECK_THROWS_AS(pow(Real::of(0L, w), two), domain_error);
    CHECK_THROWS_AS(pow(Real::of(-2L, w), two), domain_error);
}

TEST_CASE("rpow is monotone in the exponent on sampled grids") {
    Precision p;
    long w = p.working();
    Real base_up = Real::of(3L, w), base_down = Real::of(Rational(1, 3), w);
    Real prev_up = pow(base_up, Real::of(-5L, w));
    Real prev_down = pow(base_down, Real::of(-5L, w));
    for (long i = 1; i <= 40; ++i) {
        Real y = Real::of(-5L, w) + Real::of(i, w) / 4;
        Real up = pow(base_up, y), down = pow(base_down, y);
        CHECK(up > prev_up);
        CHECK(down < prev_down);
        prev_up = up;
        prev_down = down;
    }
}

TEST_CASE("parsing accepts decimals and fractions") {
    CHECK(Real::parse("0.25", 64) == Real::of(Rational(1, 4), 64));
    CHECK(Real::parse("3/4", 64) == Real::of(Rational(3, 4), 64));
    CHECK(Real::parse("-1.5", 64) == Real::of(Rational(-3, 2), 64));
    CHECK(Real::parse("1e3", 64) == Real::of(1000L, 64));
    CHECK_THROWS_AS(Real::parse("zzz", 64), parse_error);
    CHECK_THROWS_AS(Real::parse("1.5x", 64), parse_error);
    CHECK_THROWS_AS(Real::parse("", 64), parse_error);
}

TEST_CASE("printing: exact values in full, truncations marked") {
    Precision p;
    long w = p.working();
    CHECK(to_string(Real::of(2L, w), 6) == "2");
    CHECK(to_string(Real::of(Rational(1, 4), w), 6) == "0.25");
    CHECK(to_string(Real::of(100L, w), 2) == "100");
    CHECK(to_string(Real::of(Rational(-7, 2), w), 6) == "-3.5");
    CHECK(to_string(Real::of(0L, w), 6) == "0");
    CHECK(to_string(sqrt(Real::of(2L, w)), 6) == "1.41421…");
    CHECK(to_string(-sqrt(Real::of(2L, w)), 6) == "-1.41421…");
    CHECK(to_string(constant(Constant::e_to_e, p), 7) == "15.15426…");
    // small magnitudes keep leading zeros, large ones go scientific
    CHECK(to_string(Real::of(Rational(1, 30000), w), 3) == "0.0000333…");
    CHECK(to_string(exp(Real::of(100L, w)), 6) == "2.68811…e+43");
}

TEST_CASE("non-finite results are trapped") {
    long w = 128;
    CHECK_THROWS_AS(Real::of(1L, w) / Real::of(0L, w), domain_error);
    CHECK_THROWS_AS(log(Real::of(0L, w)), domain_error);
    CHECK_THROWS_AS(log(Real::of(-3L, w)), domain_error);
    CHECK_THROWS_AS(log1p(Real::of(-2L, w)), domain_error);
    CHECK_THROWS_AS(sqrt(Real::of(-1L, w)), domain_error);
    CHECK_THROWS_AS(exp(ldexp(Real::of(1L, w), 100)), numeric_error);
}

TEST_CASE("precision plumbing") {
    Real x = sqrt(Real::of(2L, 128));
    Real y = sqrt(Real::of(2L, 256));
    CHECK(x.prec() == 128);
    CHECK(y.prec() == 256);
    CHECK(testutil::approx(x, y, pow2(-120, 256)));
    CHECK((x + y).prec() == 256);
    CHECK(with_prec(y, 64).prec() == 64);
    CHECK(exponent(Real::of(8L, 64)) == 4);
    CHECK(sign(Real::of(-3L, 64)) == -1);
    CHECK(is_zero(Real::of(0L, 64)));
}

TEST_CASE("precision type validates its floor") {
    CHECK_THROWS_AS(Precision(16), domain_error);
    CHECK_THROWS_AS(Precision(128, 4), domain_error);
    CHECK(Precision(128).working() == 144);
}
