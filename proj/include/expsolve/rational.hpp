#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "expsolve/errors.hpp"

namespace expsolve {

using Int = boost::multiprecision::cpp_int;

// Exact rational, always in lowest terms with positive denominator
// (cpp_rational canonicalizes on every operation). Zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

// max(|num|, den) — the usual height of a rational.
inline Int height(const Rational& q) {
    Int n = abs(num(q)), d = den(q);
    return n > d ? n : d;
}

inline Int pow_int(const Int& base, unsigned long e) {
    return boost::multiprecision::pow(base, e);
}

// q^e for a (possibly negative) machine-integer exponent.
inline Rational pow_rational(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (q == 0 && e < 0) throw domain_error("0 cannot be raised to a negative power");
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1UL
                            : static_cast<unsigned long>(e);
    Int pn = pow_int(num(q), k), pd = pow_int(den(q), k);
    return e < 0 ? Rational(pd, pn) : Rational(pn, pd);
}

// Accepts "p" or "p/q" with an optional leading '-'; q >= 1. Result is canonical.
inline Rational parse_rational(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) -> void { throw parse_error("invalid rational: " + msg, i); };
    if (text.empty()) fail("empty string");
    std::size_t start = 0;
    if (text[0] == '-') start = 1;
    std::size_t slash = text.find('/');
    std::string_view num_part = text.substr(start, slash == std::string_view::npos ? slash : slash - start);
    if (num_part.empty()) fail("missing numerator");
    for (char c : num_part) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("bad digit in numerator");
        ++i;
    }
    Int n{std::string(num_part)};
    if (text[0] == '-') n = -n;
    if (slash == std::string_view::npos) return Rational(n);
    std::string_view den_part = text.substr(slash + 1);
    i = slash + 1;
    if (den_part.empty()) fail("missing denominator");
    for (char c : den_part) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("bad digit in denominator");
        ++i;
    }
    Int d{std::string(den_part)};
    if (d == 0) fail("zero denominator");
    return Rational(n, d);
}

// Canonical form: "p" when integral, else "p/q".
inline std::string to_string(const Rational& q) {
    std::string s = num(q).str();
    if (!is_integer(q)) s += "/" + den(q).str();
    return s;
}

} // namespace expsolve
