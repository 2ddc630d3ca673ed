#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "expsolve/errors.hpp"
#include "expsolve/exact.hpp"
#include "expsolve/rational.hpp"
#include "expsolve/real.hpp"

// A deliberately small symbolic grammar: exact rationals, quadratic surds
// a + b*sqrt(d), rational powers r^(p/q), and e^r. That covers every constant
// this toolkit classifies; anything outside the four forms is rejected
// rather than classified unsoundly.

namespace expsolve {

struct Rat {
    Rational q;
    bool operator==(const Rat&) const = default;
};

// a + b*sqrt(d) with b != 0 and d >= 2 squarefree.
struct Surd {
    Rational a, b;
    Int d;
    bool operator==(const Surd&) const = default;
};

// r^e with r > 0 rational and e a non-integer rational in lowest terms.
struct RatPow {
    Rational r, e;
    bool operator==(const RatPow&) const = default;
};

// e^r with r != 0.
struct ExpRat {
    Rational r;
    bool operator==(const ExpRat&) const = default;
};

using NumberExpr = std::variant<Rat, Surd, RatPow, ExpRat>;

// Largest radicand we normalize: trial division to 10^6 plus one
// perfect-square probe is an exact squarefree split for n <= 10^12.
inline constexpr long long kMaxRadicand = 1000000000000LL;

// n = s^2 * d with d squarefree.
inline std::pair<Int, Int> split_square(const Int& n) {
    if (n > kMaxRadicand) throw unsupported_form_error("sqrt radicand exceeds 10^12");
    Int s = 1, d = 1, rest = n;
    for (Int f = 2; f <= 1000000 && f * f <= rest; ++f) {
        if (rest % f != 0) continue;
        int k = 0;
        while (rest % f == 0) {
            rest /= f;
            ++k;
        }
        for (int i = 0; i < k / 2; ++i) s *= f;
        if (k % 2) d *= f;
    }
    if (rest > 1) {
        if (auto r = integer_nth_root(rest, 2))
            s *= *r;
        else
            d *= rest;  // prime, or a product of two distinct primes > 10^6
    }
    return {s, d};
}

inline NumberExpr make_rat(Rational q) { return Rat{std::move(q)}; }

// Canonicalizes: extracts square factors from d, folds b = 0 or d = 1 away.
inline NumberExpr make_surd(Rational a, Rational b, Int d) {
    if (d < 0) throw unsupported_form_error("sqrt of a negative number is not real");
    if (b == 0 || d == 0) return Rat{std::move(a)};
    if (d == 1) return Rat{a + b};
    auto [s, df] = split_square(d);
    b *= Rational(s);
    if (df == 1) return Rat{a + b};
    return Surd{std::move(a), std::move(b), std::move(df)};
}

// Canonicalizes: folds integer exponents (and the trivial bases) to Rat.
inline NumberExpr make_ratpow(Rational r, Rational e) {
    if (r < 0) throw unsupported_form_error("negative base with a fractional exponent is not real");
    if (r == 0) {
        if (e > 0) return Rat{Rational(0)};
        throw domain_error(e == 0 ? "0^0 is undefined here" : "0 cannot be raised to a negative power");
    }
    if (r == 1 || e == 0) return Rat{Rational(1)};
    if (is_integer(e)) {
        Int p = num(e);
        Int cost = abs(p) * (msb(height(r)) + 1);
        if (cost > Int(kMaxExactBits))
            throw numeric_error("integer power exceeds the representable size cap");
        return Rat{pow_rational(r, p.convert_to<long>())};
    }
    return RatPow{std::move(r), std::move(e)};
}

inline NumberExpr make_exprat(Rational r) {
    if (r == 0) return Rat{Rational(1)};
    return ExpRat{std::move(r)};
}

inline NumberExpr negate(const NumberExpr& x) {
    if (auto* r = std::get_if<Rat>(&x)) return Rat{-r->q};
    if (auto* s = std::get_if<Surd>(&x)) return Surd{-s->a, -s->b, s->d};
    throw unsupported_form_error("negation of a power or exponential");
}

inline NumberExpr add(const NumberExpr& x, const NumberExpr& y) {
    if (auto* rx = std::get_if<Rat>(&x)) {
        if (auto* ry = std::get_if<Rat>(&y)) return Rat{rx->q + ry->q};
        if (auto* sy = std::get_if<Surd>(&y)) return Surd{sy->a + rx->q, sy->b, sy->d};
    } else if (auto* sx = std::get_if<Surd>(&x)) {
        if (auto* ry = std::get_if<Rat>(&y)) return Surd{sx->a + ry->q, sx->b, sx->d};
        if (auto* sy = std::get_if<Surd>(&y)) {
            if (sx->d == sy->d) return make_surd(sx->a + sy->a, sx->b + sy->b, sx->d);
            throw unsupported_form_error("sum of unlike radicals");
        }
    }
    throw unsupported_form_error("sum involving a power or exponential");
}

inline NumberExpr sub(const NumberExpr& x, const NumberExpr& y) { return add(x, negate(y)); }

inline NumberExpr mul(const NumberExpr& x, const NumberExpr& y) {
    if (auto* rx = std::get_if<Rat>(&x)) {
        if (auto* ry = std::get_if<Rat>(&y)) return Rat{rx->q * ry->q};
        if (rx->q == 0) return Rat{Rational(0)};
        if (rx->q == 1) return y;
        if (auto* sy = std::get_if<Surd>(&y)) return Surd{sy->a * rx->q, sy->b * rx->q, sy->d};
        throw unsupported_form_error("rational multiple of a power or exponential");
    }
    if (std::holds_alternative<Rat>(y)) return mul(y, x);
    if (auto* sx = std::get_if<Surd>(&x)) {
        if (auto* sy = std::get_if<Surd>(&y)) {
            if (sx->d == sy->d) {
                Rational a = sx->a * sy->a + sx->b * sy->b * Rational(sx->d);
                Rational b = sx->a * sy->b + sx->b * sy->a;
                return make_surd(std::move(a), std::move(b), sx->d);
            }
            if (sx->a == 0 && sy->a == 0)  // b1*sqrt(d1) * b2*sqrt(d2) = b1*b2*sqrt(d1*d2)
                return make_surd(Rational(0), sx->b * sy->b, sx->d * sy->d);
            throw unsupported_form_error("product of unlike radicals");
        }
    }
    throw unsupported_form_error("product involving a power or exponential");
}

// x^e for rational e, within the closed forms.
inline NumberExpr pow_expr(const NumberExpr& x, const Rational& e) {
    if (auto* r = std::get_if<Rat>(&x)) {
        if (r->q < 0) {
            if (!is_integer(e))
                throw unsupported_form_error("negative base with a fractional exponent is not real");
            Int p = num(e);
            if (abs(p) * (msb(height(r->q)) + 1) > Int(kMaxExactBits))
                throw numeric_error("integer power exceeds the representable size cap");
            return Rat{pow_rational(r->q, p.convert_to<long>())};
        }
        return make_ratpow(r->q, e);
    }
    if (std::holds_alternative<Surd>(x)) {
        if (!is_integer(e)) throw unsupported_form_error("fractional power of a surd");
        long k = num(e).convert_to<long>();
        if (k == 0) return Rat{Rational(1)};
        bool inv = k < 0;
        unsigned long n = inv ? static_cast<unsigned long>(-(k + 1)) + 1UL
                              : static_cast<unsigned long>(k);
        if (n > 512) throw numeric_error("surd power exponent cap exceeded");
        NumberExpr acc = Rat{Rational(1)};
        NumberExpr base = x;
        while (n) {
            if (n & 1) acc = mul(acc, base);
            n >>= 1;
            if (n) base = mul(base, base);
        }
        if (!inv) return acc;
        if (auto* sa = std::get_if<Surd>(&acc)) {
            // 1/(a+b*sqrt(d)) = (a-b*sqrt(d))/(a^2-b^2 d)
            Rational norm = sa->a * sa->a - sa->b * sa->b * Rational(sa->d);
            return make_surd(sa->a / norm, -sa->b / norm, sa->d);
        }
        Rational q = std::get<Rat>(acc).q;
        if (q == 0) throw domain_error("division by zero in surd power");
        return Rat{1 / q};
    }
    if (auto* rp = std::get_if<RatPow>(&x)) return make_ratpow(rp->r, rp->e * e);
    const auto& er = std::get<ExpRat>(x);
    return make_exprat(er.r * e);
}

// Multiplicative inverse, exact in all four forms.
inline NumberExpr reciprocal(const NumberExpr& x) {
    if (auto* r = std::get_if<Rat>(&x)) {
        if (r->q == 0) throw domain_error("reciprocal of zero");
        return Rat{1 / r->q};
    }
    if (std::holds_alternative<Surd>(x)) return pow_expr(x, Rational(-1));
    if (auto* rp = std::get_if<RatPow>(&x)) return RatPow{rp->r, -rp->e};
    return make_exprat(-std::get<ExpRat>(x).r);
}

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    NumberExpr run() {
        NumberExpr v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("unexpected trailing input", pos_);
        return v;
    }

private:
    NumberExpr expr() {
        NumberExpr v = term();
        while (true) {
            skip_ws();
            if (accept('+'))
                v = add(v, term());
            else if (accept('-'))
                v = sub(v, term());
            else
                return v;
        }
    }

    NumberExpr term() {
        NumberExpr v = factor();
        while (true) {
            skip_ws();
            if (accept('*'))
                v = mul(v, factor());
            else
                return v;
        }
    }

    NumberExpr factor() {
        NumberExpr v = base();
        skip_ws();
        if (accept('^')) {
            expect('(');
            Rational e = rational();
            expect(')');
            v = pow_expr(v, e);
        }
        return v;
    }

    NumberExpr base() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NumberExpr v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return Rat{rational()};
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string_view word = s_.substr(start, pos_ - start);
            if (word == "e") return make_exprat(Rational(1));
            if (word == "sqrt") {
                expect('(');
                Int n = natural();
                expect(')');
                return make_surd(Rational(0), Rational(1), n);
            }
            throw parse_error("unknown name '" + std::string(word) + "'", start);
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    Rational rational() {
        skip_ws();
        bool neg = accept('-');
        Int n = natural();
        if (neg) n = -n;
        skip_ws();
        if (accept('/')) {
            Int d = natural();
            if (d == 0) throw parse_error("zero denominator", pos_);
            return Rational(n, d);
        }
        return Rational(n);
    }

    Int natural() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw parse_error("expected digits", pos_);
        return Int(std::string(s_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (!accept(c))
            throw parse_error(std::string("expected '") + c + "'", pos_);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

// expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := base ('^' '(' rational ')')? ;
// base := rational | 'sqrt' '(' natural ')' | 'e' | '(' expr ')'.
// The result is canonical (squarefree d, folded integer exponents).
inline NumberExpr parse_expr(std::string_view text) { return detail::ExprParser(text).run(); }

// Canonical text form; parse_expr(to_string(x)) == x.
inline std::string to_string(const NumberExpr& x) {
    if (auto* r = std::get_if<Rat>(&x)) return to_string(r->q);
    if (auto* s = std::get_if<Surd>(&x)) {
        std::string root = "sqrt(" + s->d.str() + ")";
        Rational babs = s->b < 0 ? -s->b : s->b;
        std::string scaled = (babs == 1 ? root : to_string(babs) + "*" + root);
        if (s->a == 0) return s->b > 0 ? scaled : "0-" + scaled;
        return to_string(s->a) + (s->b > 0 ? "+" : "-") + scaled;
    }
    if (auto* rp = std::get_if<RatPow>(&x)) {
        std::string base = is_integer(rp->r) ? to_string(rp->r) : "(" + to_string(rp->r) + ")";
        return base + "^(" + to_string(rp->e) + ")";
    }
    const auto& er = std::get<ExpRat>(x);
    return er.r == 1 ? "e" : "e^(" + to_string(er.r) + ")";
}

// Numeric value at the given precision.
inline Real eval(const NumberExpr& x, long bits) {
    if (auto* r = std::get_if<Rat>(&x)) return Real::of(r->q, bits);
    if (auto* s = std::get_if<Surd>(&x))
        return Real::of(s->a, bits) + Real::of(s->b, bits) * sqrt(Real::of(s->d, bits));
    if (auto* rp = std::get_if<RatPow>(&x))
        return pow(Real::of(rp->r, bits), Real::of(rp->e, bits));
    return exp(Real::of(std::get<ExpRat>(x).r, bits));
}

} // namespace expsolve
