#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace expsolve;
using testutil::matches_printed;

TEST_CASE("bisection reaches width and residual targets") {
    Precision p;
    long w = p.working();
    auto f = [&](const Real& x) { return x * x - 2; };
    long iters = 0;
    Real r = find_root_monotone(f, {Real::of(1L, w), Real::of(2L, w)}, p, &iters);
    CHECK(matches_printed(r, "1.41421"));
    CHECK(testutil::approx(r, sqrt(Real::of(2L, w)), pow2(-p.bits + 2, w)));
    CHECK(abs(f(with_prec(r, w))) < pow2(-(p.bits - p.guard), w) * 2);
    CHECK(iters > 0);
}

TEST_CASE("x log x = log 2 has the root 1.55961...") {
    Precision p;
    long w = p.working();
    Real ln2 = log(Real::of(2L, w));
    auto f = [&](const Real& x) { return x * log(x) - ln2; };
    Real r = find_root_monotone(f, {Real::of(1L, w), Real::of(2L, w)}, p);
    CHECK(matches_printed(r, "1.55961"));
}

TEST_CASE("bracket without a sign change is rejected") {
    Precision p;
    long w = p.working();
    auto f = [](const Real& x) { return x * log(x); };  // negative on (0.1, 0.9)
    CHECK_THROWS_AS(
        find_root_monotone(f, {Real::of(Rational(1, 10), w), Real::of(Rational(9, 10), w)}, p),
        domain_error);
    auto g = [](const Real& x) { return x; };
    CHECK_THROWS_AS(find_root_monotone(g, {Real::of(2L, w), Real::of(1L, w)}, p), domain_error);
}

TEST_CASE("an endpoint that is already a root is returned") {
    Precision p;
    long w = p.working();
    auto f = [](const Real& x) { return x - 1; };
    Real r = find_root_monotone(f, {Real::of(1L, w), Real::of(2L, w)}, p);
    CHECK(r == Real::of(1L, w));
}

TEST_CASE("doubling the precision squeezes the residual") {
    auto run = [&](long bits) {
        Precision p(bits);
        long w = p.working();
        Real ln3 = log(Real::of(3L, w));
        auto f = [&](const Real& x) { return x * log(x) - ln3; };
        Real root = find_root_monotone(f, {Real::of(1L, w), Real::of(3L, w)}, p);
        Real x = with_prec(root, 512);
        return abs(x * log(x) - log(Real::of(3L, 512)));
    };
    Real r128 = run(128), r256 = run(256);
    CHECK((is_zero(r256) || r128 > r256 * ldexp(Real::of(1L, 512), 64)));
}
