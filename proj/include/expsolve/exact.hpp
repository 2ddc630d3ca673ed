#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "expsolve/errors.hpp"
#include "expsolve/rational.hpp"

// Exact decision procedures for the exponential Diophantine questions the
// toolkit answers: perfect-power extraction, the nature of Q^Q, the rational
// points of x^y = y^x, and the rational fixed points of y = x^(x^y).
// Everything here is integer arithmetic; no floating point is involved, so
// no decision can be wrong by rounding.

namespace expsolve {

// Largest value whose exact power we are willing to materialize, in bits.
inline constexpr std::size_t kMaxExactBits = std::size_t(1) << 24;

// r with r^k == n, if such an integer exists. Binary search seeded by bit
// length; exactness is checked by powering back.
inline std::optional<Int> integer_nth_root(const Int& n, unsigned long k) {
    if (n < 0) throw domain_error("integer_nth_root: negative radicand");
    if (k == 0) throw domain_error("integer_nth_root: zero index");
    if (n == 0 || n == 1 || k == 1) return n;
    unsigned long bits = msb(n) + 1;  // n >= 2 here
    if (k >= bits) return std::nullopt;  // r >= 2 would need r^k >= 2^k > n
    Int lo = Int(1) << ((bits - 1) / k);
    Int hi = (Int(1) << (bits / k + 1));
    while (lo < hi) {
        Int mid = (lo + hi + 1) >> 1;
        if (pow_int(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    if (pow_int(lo, k) == n) return lo;
    return std::nullopt;
}

// s with s^k == q. Valid to take roots of numerator and denominator
// independently: q is in lowest terms, so by unique factorization q is a
// perfect k-th power iff both parts are.
inline std::optional<Rational> rational_nth_root(const Rational& q, unsigned long k) {
    if (q <= 0) throw domain_error("rational_nth_root: radicand must be positive");
    auto rn = integer_nth_root(num(q), k);
    if (!rn) return std::nullopt;
    auto rd = integer_nth_root(den(q), k);
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

enum class QQTag { RationalValue, IrrationalReal, NonReal };

// Arithmetic nature of Q^Q for rational Q != 0.
struct QQNature {
    QQTag tag;
    std::optional<Rational> value;  // present iff tag == RationalValue
};

// Case analysis: integers power exactly; Q = ±a/b with b > 1 gives an
// irrational real value except when Q < 0 and b is even, where the b-th
// root of -1 leaves the reals. No search is involved.
inline QQNature qq_nature(const Rational& Q) {
    if (Q == 0) throw domain_error("qq_nature: 0^0 is undefined here");
    if (is_integer(Q)) {
        Int m = num(Q), a = abs(m);
        // |Q|^|Q| needs about |Q|*log2|Q| bits; refuse absurd materializations.
        if (a > 1 && a * (msb(a) + 1) > kMaxExactBits)
            throw numeric_error("qq_nature: Q^Q exceeds the representable size cap");
        Int p = pow_int(a, a.convert_to<unsigned long>());
        Rational v;
        if (m > 0)
            v = Rational(p);
        else
            v = (a % 2 == 0) ? Rational(1, p) : Rational(-1, p);
        return {QQTag::RationalValue, v};
    }
    if (Q < 0 && den(Q) % 2 == 0) return {QQTag::NonReal, std::nullopt};
    return {QQTag::IrrationalReal, std::nullopt};
}

// Exact curve point x(n) = (1+1/n)^n, y(n) = (1+1/n)^(n+1); x < y and
// x^y = y^x (the latter is checked numerically in the test suite).
inline std::pair<Rational, Rational> curve_rational_point(unsigned long n) {
    if (n < 1) throw domain_error("curve_rational_point: n must be >= 1");
    if (n > 500000) throw numeric_error("curve_rational_point: n^n exceeds the size cap");
    Int a = Int(n) + 1, b = Int(n);
    return {Rational(pow_int(a, n), pow_int(b, n)),
            Rational(pow_int(a, n + 1), pow_int(b, n + 1))};
}

// n such that (A1, A2) = (x(n), y(n)), if any: requires A2/A1 - 1 = 1/n
// and then A1 = (1+1/n)^n exactly.
inline std::optional<unsigned long> is_curve_pair(const Rational& A1, const Rational& A2) {
    if (!(0 < A1 && A1 < A2)) throw domain_error("is_curve_pair: need 0 < A1 < A2");
    Rational ratio = A2 / A1 - 1;
    if (num(ratio) != 1) return std::nullopt;
    Int n = den(ratio);
    // x(n) has denominator n^n: at least n bits for n >= 2, so a small
    // denominator rules out large n without materializing n^n.
    if (n >= 2 && msb(den(A1)) + 1 < n) return std::nullopt;
    unsigned long nl = n.convert_to<unsigned long>();
    auto [x, y] = curve_rational_point(nl);
    if (A1 == x && A2 == y) return nl;
    return std::nullopt;
}

// n with n^n == v, if any. n^n is strictly increasing so the scan is exact.
inline std::optional<unsigned long> as_perfect_nn(const Int& v) {
    if (v < 1) return std::nullopt;
    for (unsigned long n = 1;; ++n) {
        Int p = pow_int(Int(n), n);
        if (p == v) return n;
        if (p > v) return std::nullopt;
    }
}

// All rational Q1 > 0 with Q^(Q^Q1) = Q1, sorted ascending:
// {1/4, 1/2} for Q = 1/16; {1/n} for Q = 1/n^n; nothing otherwise.
// (16 is not of the form n^n, so the two cases cannot overlap.)
inline std::vector<Rational> tower_fix_rational_solutions(const Rational& Q) {
    if (Q <= 0) throw domain_error("tower_fix_rational_solutions: Q must be positive");
    if (Q == Rational(1, 16)) return {Rational(1, 4), Rational(1, 2)};
    if (num(Q) == 1) {
        if (auto n = as_perfect_nn(den(Q))) return {Rational(1, Int(*n))};
    }
    return {};
}

inline bool is_tower_fix(const Rational& Q, const Rational& Q1) {
    if (Q <= 0 || Q1 <= 0) throw domain_error("is_tower_fix: inputs must be positive");
    for (const Rational& s : tower_fix_rational_solutions(Q))
        if (s == Q1) return true;
    return false;
}

// n with v == x(n) = (n+1)^n / n^n, detected through the denominator.
inline std::optional<unsigned long> curve_x_index(const Rational& v) {
    if (v <= 1) return std::nullopt;
    const Int& d = den(v);
    for (unsigned long n = 1;; ++n) {
        Int p = pow_int(Int(n), n);
        if (p > d) return std::nullopt;
        if (p == d) {
            if (num(v) == pow_int(Int(n) + 1, n)) return n;
            return std::nullopt;
        }
    }
}

// n with v == y(n) = (n+1)^(n+1) / n^(n+1).
inline std::optional<unsigned long> curve_y_index(const Rational& v) {
    if (v <= 1) return std::nullopt;
    const Int& d = den(v);
    for (unsigned long n = 1;; ++n) {
        Int p = pow_int(Int(n), n + 1);
        if (p > d) return std::nullopt;
        if (p == d) {
            if (num(v) == pow_int(Int(n) + 1, n + 1)) return n;
            return std::nullopt;
        }
    }
}

} // namespace expsolve
