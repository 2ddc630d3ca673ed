#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "expsolve/errors.hpp"
#include "expsolve/precision.hpp"
#include "expsolve/rational.hpp"

namespace expsolve {

// Arbitrary-precision real value backed by MPFR. Every value carries the
// precision that produced it; binary operations compute at the wider of the
// two operand precisions with round-to-nearest. Non-finite results never
// escape: they surface as numeric_error.
class Real {
public:
    Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Real(long bits) { mpfr_init2(v_, clamp(bits)); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    long prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    static Real of(long value, long bits) {
        Real r(bits);
        mpfr_set_si(r.v_, value, MPFR_RNDN);
        return r;
    }

    // Exact when bits covers the integer's width, correctly rounded otherwise.
    static Real of(const Int& value, long bits) {
        Real exact(std::max<long>(2, value == 0 ? 2 : static_cast<long>(msb(abs(value))) + 1));
        std::string digits = value.str();
        if (mpfr_set_str(exact.v_, digits.c_str(), 10, MPFR_RNDN) != 0 && value != 0)
            throw numeric_error("Real::of: integer conversion was not exact");
        return with_prec(exact, bits);
    }

    // Correctly rounded num/den division.
    static Real of(const Rational& q, long bits) {
        Real n = of(num(q), std::max<long>(2, static_cast<long>(q == 0 ? 1 : msb(abs(num(q)))) + 1));
        Real d = of(den(q), std::max<long>(2, static_cast<long>(msb(den(q))) + 1));
        Real r(bits);
        mpfr_div(r.v_, n.v_, d.v_, MPFR_RNDN);
        r.ensure_finite();
        return r;
    }

    // Accepts a decimal literal or "p/q" fraction syntax.
    static Real parse(std::string_view text, long bits) {
        if (text.find('/') != std::string_view::npos) return of(parse_rational(text), bits);
        Real r(bits);
        std::string s(text);
        char* end = nullptr;
        mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
        if (end != s.c_str() + s.size() || s.empty())
            throw parse_error("invalid real literal: '" + s + "'",
                              static_cast<std::size_t>(end - s.c_str()));
        r.ensure_finite();
        return r;
    }

    // Re-round (or zero-pad) to a different precision.
    friend Real with_prec(const Real& x, long bits) {
        Real r(bits);
        mpfr_set(r.v_, x.v_, MPFR_RNDN);
        return r;
    }

    friend int sign(const Real& x) { return mpfr_sgn(x.v_); }
    friend bool is_zero(const Real& x) { return mpfr_zero_p(x.v_) != 0; }
    // Binary exponent: x = m * 2^(exponent) with m in [1/2, 1). Nonzero input only.
    friend long exponent(const Real& x) { return static_cast<long>(mpfr_get_exp(x.v_)); }
    friend double to_double(const Real& x) { return mpfr_get_d(x.v_, MPFR_RNDN); }

#define EXPSOLVE_REAL_BINOP(op, fn)                                        \
    friend Real operator op(const Real& a, const Real& b) {               \
        Real r(std::max(a.prec(), b.prec()));                             \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                  \
        r.ensure_finite();                                                \
        return r;                                                         \
    }                                                                      \
    friend Real operator op(const Real& a, long b) {                      \
        Real r(a.prec());                                                 \
        fn##_si(r.v_, a.v_, b, MPFR_RNDN);                                \
        r.ensure_finite();                                                \
        return r;                                                         \
    }

    EXPSOLVE_REAL_BINOP(+, mpfr_add)
    EXPSOLVE_REAL_BINOP(-, mpfr_sub)
    EXPSOLVE_REAL_BINOP(*, mpfr_mul)
#undef EXPSOLVE_REAL_BINOP

    friend Real operator/(const Real& a, const Real& b) {
        if (mpfr_zero_p(b.v_)) throw domain_error("division by zero");
        Real r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        r.ensure_finite();
        return r;
    }
    friend Real operator/(const Real& a, long b) {
        if (b == 0) throw domain_error("division by zero");
        Real r(a.prec());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        r.ensure_finite();
        return r;
    }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator-(long a, const Real& b) { return -(b - a); }
    friend Real operator-(const Real& a) {
        Real r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
    friend bool operator!=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) != 0; }

    friend Real abs(const Real& x) {
        Real r(x.prec());
        mpfr_abs(r.v_, x.v_, MPFR_RNDN);
        return r;
    }

    // Exact scaling by 2^k.
    friend Real ldexp(const Real& x, long k) {
        Real r(x.prec());
        mpfr_mul_2si(r.v_, x.v_, k, MPFR_RNDN);
        r.ensure_finite();
        return r;
    }

    friend Real exp(const Real& x) {
        Real r(x.prec());
        mpfr_exp(r.v_, x.v_, MPFR_RNDN);
        r.ensure_finite();
        return r;
    }

    friend Real log(const Real& x) {
        if (mpfr_sgn(x.v_) <= 0) throw domain_error("log: argument must be positive");
        Real r(x.prec());
        mpfr_log(r.v_, x.v_, MPFR_RNDN);
        r.ensure_finite();
        return r;
    }

    // log(1+x), accurate for small x.
    friend Real log1p(const Real& x) {
        if (mpfr_cmp_si(x.v_, -1) <= 0) throw domain_error("log1p: argument must exceed -1");
        Real r(x.prec());
        mpfr_log1p(r.v_, x.v_, MPFR_RNDN);
        r.ensure_finite();
        return r;
    }

    friend Real sqrt(const Real& x) {
        if (mpfr_sgn(x.v_) < 0) throw domain_error("sqrt: argument must be nonnegative");
        Real r(x.prec());
        mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
        r.ensure_finite();
        return r;
    }

    // x^y for x > 0 (correctly rounded by MPFR).
    friend Real pow(const Real& x, const Real& y) {
        if (mpfr_sgn(x.v_) <= 0) throw domain_error("pow: base must be positive");
        Real r(std::max(x.prec(), y.prec()));
        mpfr_pow(r.v_, x.v_, y.v_, MPFR_RNDN);
        r.ensure_finite("pow: result overflows the representable range");
        return r;
    }

private:
    static long clamp(long bits) { return std::max<long>(MPFR_PREC_MIN, bits); }

    void ensure_finite(const char* what = "non-finite numeric result") const {
        if (!mpfr_number_p(v_)) throw numeric_error(what);
    }

    mpfr_t v_;
};

// 2^k at the given precision (exact).
inline Real pow2(long k, long bits) { return ldexp(Real::of(1L, bits), k); }

enum class Constant { e, inv_e, e_to_e, e_to_minus_e, e_to_inv_e, e_to_minus_inv_e };

// Named constant correctly rounded to `bits` (inner steps carry 64 guard
// bits, which keeps the double rounding far below the last kept bit).
inline Real const_at(Constant which, long bits) {
    long w = bits + 64;
    auto finish = [&](const Real& x) { return with_prec(x, bits); };
    switch (which) {
        case Constant::e: return exp(Real::of(1L, bits));
        case Constant::inv_e: return exp(Real::of(-1L, bits));
        case Constant::e_to_e: return finish(exp(exp(Real::of(1L, w))));
        case Constant::e_to_minus_e: return finish(exp(-exp(Real::of(1L, w))));
        case Constant::e_to_inv_e: return finish(exp(exp(Real::of(-1L, w))));
        case Constant::e_to_minus_inv_e: return finish(exp(-exp(Real::of(-1L, w))));
    }
    throw domain_error("unknown constant");
}

inline Real constant(Constant which, const Precision& p) { return const_at(which, p.bits); }

namespace detail {

// Decimal digits of |z| (GMP integer), sign handled by the caller.
inline std::string mpz_digits(const mpz_t z) {
    char* s = mpz_get_str(nullptr, 10, z);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    if (!out.empty() && out[0] == '-') out.erase(0, 1);
    return out;
}

// If x has an exact decimal form with at most max_digits significant digits,
// produce it (without sign). Exponents beyond ±65536 are not attempted.
inline bool exact_decimal(const Real& x, long max_digits, std::string& out) {
    mpz_t m;
    mpz_init(m);
    mpfr_exp_t e2 = mpfr_get_z_2exp(m, x.raw());
    bool ok = false;
    std::string digits;
    long point = 0;  // digits after the decimal point
    if (e2 >= 0 && e2 <= 65536) {
        mpz_mul_2exp(m, m, static_cast<mp_bitcnt_t>(e2));
        digits = mpz_digits(m);
        ok = true;
    } else if (e2 < 0 && e2 >= -65536) {
        mpz_t p5;
        mpz_init(p5);
        mpz_ui_pow_ui(p5, 5, static_cast<unsigned long>(-e2));
        mpz_mul(m, m, p5);
        mpz_clear(p5);
        digits = mpz_digits(m);
        point = static_cast<long>(-e2);
        ok = true;
    }
    mpz_clear(m);
    if (!ok) return false;

    if (point >= static_cast<long>(digits.size()))
        digits.insert(0, static_cast<std::size_t>(point) - digits.size() + 1, '0');
    std::string whole = digits.substr(0, digits.size() - static_cast<std::size_t>(point));
    std::string frac = digits.substr(digits.size() - static_cast<std::size_t>(point));
    while (!frac.empty() && frac.back() == '0') frac.pop_back();

    std::string all = whole + frac;
    std::size_t first = all.find_first_not_of('0');
    if (first == std::string::npos) {
        out = "0";
        return true;
    }
    std::size_t last = all.find_last_not_of('0');
    long significant = static_cast<long>(last - first + 1);
    if (significant > max_digits) return false;
    out = whole + (frac.empty() ? "" : "." + frac);
    return true;
}

} // namespace detail

// Decimal rendering. Exact values print in full; anything else is truncated
// toward zero at `digits` significant digits and marked with a trailing
// ellipsis, e.g. "1.41421…". Far-from-unit magnitudes switch to scientific
// notation with the marker after the mantissa.
inline std::string to_string(const Real& x, long digits = 30) {
    if (digits < 1) digits = 1;
    if (is_zero(x)) return "0";
    std::string body;
    bool negative = sign(x) < 0;
    if (detail::exact_decimal(x, digits, body)) return negative ? "-" + body : body;

    mpfr_exp_t e10 = 0;
    char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(digits), x.raw(), MPFR_RNDZ);
    std::string d(raw);
    mpfr_free_str(raw);
    if (!d.empty() && d[0] == '-') d.erase(0, 1);

    std::string s;
    if (e10 > 0 && e10 <= digits) {
        s = d.substr(0, static_cast<std::size_t>(e10));
        std::string frac = d.substr(static_cast<std::size_t>(e10));
        if (!frac.empty()) s += "." + frac;
        s += "…";
    } else if (e10 <= 0 && e10 > -6) {
        s = "0." + std::string(static_cast<std::size_t>(-e10), '0') + d + "…";
    } else {
        s = d.substr(0, 1);
        if (d.size() > 1) s += "." + d.substr(1);
        s += "…e";
        long k = static_cast<long>(e10) - 1;
        s += (k >= 0 ? "+" : "") + std::to_string(k);
    }
    return negative ? "-" + s : s;
}

inline std::ostream& operator<<(std::ostream& os, const Real& x) { return os << to_string(x, 20); }

} // namespace expsolve
