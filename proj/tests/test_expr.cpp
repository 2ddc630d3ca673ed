#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace expsolve;
using testutil::matches_printed;

namespace {
Surd surd_of(const NumberExpr& x) { return std::get<Surd>(x); }
RatPow ratpow_of(const NumberExpr& x) { return std::get<RatPow>(x); }
Rational rat_of(const NumberExpr& x) { return std::get<Rat>(x).q; }
}

TEST_CASE("parsing the named constants") {
    Surd s = surd_of(parse_expr("sqrt(3)-1"));
    CHECK(s.a == Rational(-1));
    CHECK(s.b == Rational(1));
    CHECK(s.d == 3);

    RatPow rp = ratpow_of(parse_expr("(1/3)^(1/3)"));
    CHECK(rp.r == Rational(1, 3));
    CHECK(rp.e == Rational(1, 3));

    Surd s27 = surd_of(parse_expr("sqrt(27)"));
    CHECK(s27.a == 0);
    CHECK(s27.b == Rational(3));
    CHECK(s27.d == 3);

    ExpRat er = std::get<ExpRat>(parse_expr("e^(1/3)"));
    CHECK(er.r == Rational(1, 3));
    CHECK(std::get<ExpRat>(parse_expr("e")).r == Rational(1));

    Surd half = surd_of(parse_expr("(sqrt(2)+1)*(1/2)"));
    CHECK(half.a == Rational(1, 2));
    CHECK(half.b == Rational(1, 2));
    CHECK(half.d == 2);

    CHECK(rat_of(parse_expr("17")) == Rational(17));
    CHECK(rat_of(parse_expr("-5/3")) == Rational(-5, 3));
    CHECK(rat_of(parse_expr(" 14 + 2 ")) == Rational(16));
}

TEST_CASE("surd arithmetic stays closed where defined") {
    CHECK(surd_of(parse_expr("sqrt(8)+sqrt(2)")) == Surd{Rational(0), Rational(3), Int(2)});
    CHECK(surd_of(parse_expr("sqrt(2)*sqrt(3)")) == Surd{Rational(0), Rational(1), Int(6)});
    CHECK(rat_of(parse_expr("sqrt(2)*sqrt(2)")) == Rational(2));
    CHECK(surd_of(parse_expr("(sqrt(2)+1)^(2)")) == Surd{Rational(3), Rational(2), Int(2)});
    CHECK(surd_of(parse_expr("0-sqrt(2)")) == Surd{Rational(0), Rational(-1), Int(2)});
    CHECK(rat_of(parse_expr("(sqrt(5)+1)*(sqrt(5)-1)")) == Rational(4));
    CHECK(surd_of(parse_expr("sqrt(12)")) == Surd{Rational(0), Rational(2), Int(3)});
    CHECK(rat_of(parse_expr("sqrt(4)")) == Rational(2));
    CHECK(rat_of(parse_expr("sqrt(1)")) == Rational(1));
    CHECK(rat_of(parse_expr("sqrt(0)")) == Rational(0));
}

TEST_CASE("power folding and composition") {
    CHECK(rat_of(parse_expr("2^(4)")) == Rational(16));
    CHECK(rat_of(parse_expr("(1/2)^(-2)")) == Rational(4));
    CHECK(rat_of(parse_expr("e^(0)")) == Rational(1));
    CHECK(rat_of(parse_expr("1^(1/2)")) == Rational(1));
    CHECK(rat_of(parse_expr("((1/3)^(1/3))^(3)")) == Rational(1, 3));
    CHECK(ratpow_of(parse_expr("((1/3)^(1/3))^(2)")) == RatPow{Rational(1, 3), Rational(2, 3)});
    CHECK(std::get<ExpRat>(parse_expr("(e^(2))^(1/4)")).r == Rational(1, 2));
    CHECK(ratpow_of(parse_expr("2^(1/2)")) == RatPow{Rational(2), Rational(1, 2)});
    CHECK_THROWS_AS(parse_expr("2^(1/2)^(2)"), parse_error);  // one exponent per factor
}

TEST_CASE("unsupported forms are structured errors, not verd* fodder") {
    CHECK_THROWS_AS(parse_expr("e+1"), unsupported_form_error);
    CHECK_THROWS_AS(parse_expr("sqrt(2)+sqrt(3)"), unsupported_form_error);
    CHECK_THROWS_AS(parse_expr("2*e"), unsupported_form_error);
    CHECK_THROWS_AS(parse_expr("(0-2)^(1/2)"), unsupported_form_error);
    CHECK_THROWS_AS(parse_expr("sqrt(2)^(1/2)"), unsupported_form_error);
    CHECK_THROWS_AS(parse_expr("0-e"), unsupported_form_error);
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse_expr(""), parse_error);
    CHECK_THROWS_AS(parse_expr("2^2"), parse_error);       // exponent must be parenthesized
    CHECK_THROWS_AS(parse_expr("(1+2"), parse_error);
    CHECK_THROWS_AS(parse_expr("foo(2)"), parse_error);
    CHECK_THROWS_AS(parse_expr("1/0"), parse_error);
    CHECK_THROWS_AS(parse_expr("2//3"), parse_error);
    CHECK_THROWS_AS(parse_expr("(1+1)/2"), parse_error);   // '/' is not a term operator
    CHECK_THROWS_AS(parse_expr("sqrt(-4)"), parse_error);  // natural required
    try {
        parse_expr("1+*2");
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.pos == 2);
    }
}

TEST_CASE("0^0 is rejected") {
    CHECK_THROWS_AS(parse_expr("0^(0)"), domain_error);
    CHECK(rat_of(parse_expr("0^(2)")) == Rational(0));
    CHECK_THROWS_AS(parse_expr("0^(-1)"), domain_error);
}

TEST_CASE("canonical text round-trips") {
    for (const char* text :
         {"3/2", "-7", "sqrt(3)-1", "14+sqrt(2)", "(1/3)^(1/3)", "2^(1/2)", "e", "e^(1/3)",
          "e^(-2/3)", "0-sqrt(2)", "1/2+1/2*sqrt(2)", "(2/3)^(2/3)", "(3/2)^(-27/4)",
          "5-2*sqrt(7)"}) {
        NumberExpr x = parse_expr(text);
        NumberExpr y = parse_expr(to_string(x));
        CHECK(x == y);
    }
    CHECK(to_string(parse_expr("sqrt(27)")) == "3*sqrt(3)");
    CHECK(to_string(parse_expr("sqrt(3)-1")) == "-1+sqrt(3)");
    CHECK(to_string(parse_expr("(1/3)^(1/3)")) == "(1/3)^(1/3)");
    CHECK(to_string(parse_expr("e^(1/3)")) == "e^(1/3)");
}

TEST_CASE("evaluation matches the symbolic value") {
    long w = 144;
    CHECK(matches_printed(eval(parse_expr("sqrt(2)"), w), "1.41421"));
    CHECK(matches_printed(eval(parse_expr("14+sqrt(2)"), w), "15.41421"));
    CHECK(matches_printed(eval(parse_expr("(1/3)^(1/3)"), w), "0.69336"));
    CHECK(matches_printed(eval(parse_expr("e^(1/2)"), w), "1.64872"));
    CHECK(eval(parse_expr("3/4"), w) == Real::of(Rational(3, 4), w));
    CHECK(eval(parse_expr("(sqrt(2)+1)*(1/2)"), w) == (sqrt(Real::of(2L, w)) + 1) / 2);
}

TEST_CASE("exact reciprocals") {
    CHECK(reciprocal(parse_expr("1+sqrt(2)")) == parse_expr("sqrt(2)-1"));
    CHECK(reciprocal(parse_expr("2^(1/2)")) == parse_expr("2^(-1/2)"));
    CHECK(reciprocal(parse_expr("e^(1/3)")) == parse_expr("e^(-1/3)"));
    CHECK(reciprocal(parse_expr("4/7")) == parse_expr("7/4"));
    CHECK_THROWS_AS(reciprocal(parse_expr("0")), domain_error);
    // 1/(a+b sqrt(d)) rationalizes: check numerically too
    NumberExpr x = parse_expr("3-sqrt(5)");
    Real prod = eval(x, 160) * eval(reciprocal(x), 160);
    CHECK(testutil::approx(prod, Real::of(1L, 160), pow2(-140, 160)));
}

TEST_CASE("large radicands are refused rather than mis-normalized") {
    CHECK_THROWS_AS(parse_expr("sqrt(1000000000001000)"), unsupported_form_error);
    // 2 * 1000000007: the cofactor beyond the trial-division bound is prime
    CHECK(surd_of(parse_expr("sqrt(2000000014)")).d == Int(2000000014LL));
}
