#pragma once

#include <optional>

#include "expsolve/errors.hpp"
#include "expsolve/precision.hpp"
#include "expsolve/real.hpp"
#include "expsolve/roots.hpp"

// Solvers for x^x = A, u^(1/u) = v, and the parametric curve of x^y = y^x.
// All equations are handled in log form (x ln x = ln A and friends), which
// keeps brackets monotone and avoids overflow at the extremes.

namespace expsolve {

// Real roots of x^x = A. Branch structure over A:
//   A < e^(-1/e)            -> none
//   A = e^(-1/e)            -> the double root 1/e (flagged degenerate)
//   e^(-1/e) < A < 1        -> two roots, astride 1/e
//   A >= 1                  -> one root in [1, inf)
struct XxSolutions {
    int count = 0;
    std::optional<Real> lower;  // root < 1/e
    std::optional<Real> upper;  // root > 1/e
    bool degenerate = false;    // A indistinguishable from e^(-1/e) at this precision
};

inline XxSolutions solve_x_pow_x(const Real& A_in, const Precision& p) {
    if (!(A_in > 0)) throw domain_error("solve_x_pow_x: A must be positive");
    const long w = p.working();
    const Real A = with_prec(A_in, w);
    const Real threshold = const_at(Constant::e_to_minus_inv_e, w);
    const Real band = pow2(-p.bits / 2, w);

    XxSolutions out;
    if (abs(A - threshold) < band) {
        // Double root at 1/e; below this resolution the two branches merge.
        out.count = 1;
        out.degenerate = true;
        out.upper = with_prec(const_at(Constant::inv_e, w), p.bits);
        return out;
    }
    if (A < threshold) return out;

    const Real lnA = log(A);
    auto f = [&lnA](const Real& x) { return x * log(x) - lnA; };

    if (A < 1) {
        const Real inv_e = const_at(Constant::inv_e, w);
        // x ln x falls from 0 to -1/e on (0,1/e), then rises back to 0.
        Real lo = ldexp(inv_e, -1);
        int steps = 0;
        while (sign(f(lo)) < 0) {
            lo = ldexp(lo, -1);
            if (++steps > 4 * p.bits)
                throw convergence_error("solve_x_pow_x: no bracket for the lower root");
        }
        out.lower = find_root_monotone(f, {lo, inv_e}, p);
        out.upper = find_root_monotone(f, {inv_e, Real::of(1L, w)}, p);
        out.count = 2;
        return out;
    }

    if (A == 1) {
        out.count = 1;
        out.upper = Real::of(1L, p.bits);
        return out;
    }

    Real hi = Real::of(2L, w);
    int steps = 0;
    while (sign(f(hi)) < 0) {
        hi = ldexp(hi, 1);
        if (++steps > 64) throw convergence_error("solve_x_pow_x: no bracket for the root");
    }
    out.upper = find_root_monotone(f, {Real::of(1L, w), hi}, p);
    out.count = 1;
    return out;
}

// g(u) = u^(1/u); increasing on (0,e], decreasing on [e,inf), max g(e)=e^(1/e).
inline Real g(const Real& u, const Precision& p) {
    if (!(u > 0)) throw domain_error("g: u must be positive");
    const Real uw = with_prec(u, p.working());
    return with_prec(pow(uw, Real::of(1L, p.working()) / uw), p.bits);
}

enum class GBranch { lower, upper };

// Inverse of g on the requested branch: lower inverts g restricted to (0,e],
// upper inverts g on [e,inf). Solves ln u / u = ln v, monotone on each branch.
inline Real g_inverse(const Real& v_in, GBranch branch, const Precision& p) {
    const long w = p.working();
    const Real v = with_prec(v_in, w);
    if (!(v > 0)) throw domain_error("g_inverse: v must be positive");
    const Real peak = const_at(Constant::e_to_inv_e, w);
    const Real band = pow2(-p.bits / 2, w);
    if (abs(v - peak) < band) return with_prec(const_at(Constant::e, w), p.bits);
    if (v > peak)
        throw domain_error("g_inverse: v exceeds the maximum e^(1/e) = " +
                           to_string(peak, 7) + " of g");

    const Real e_w = const_at(Constant::e, w);
    const Real lnv = log(v);
    auto f = [&](const Real& u) { return log(u) / u - lnv; };

    if (branch == GBranch::lower) {
        Real lo = ldexp(e_w, -1);
        int steps = 0;
        while (sign(f(lo)) >= 0) {
            lo = ldexp(lo, -1);
            if (++steps > 4 * p.bits)
                throw convergence_error("g_inverse: no bracket on the lower branch");
        }
        return find_root_monotone(f, {lo, e_w}, p);
    }

    if (!(v > 1))
        throw domain_error("g_inverse: upper branch needs v > 1 (g tends to 1 from above)");
    Real hi = ldexp(e_w, 1);
    int steps = 0;
    while (sign(f(hi)) >= 0) {
        hi = ldexp(hi, 1);
        if (++steps > 64) throw convergence_error("g_inverse: no bracket on the upper branch");
    }
    return find_root_monotone(f, {e_w, hi}, p);
}

namespace detail {

// ln x(t) = t*log1p(1/t); stable for the whole range of t.
inline Real log_x_of_t(const Real& t) { return t * log1p(Real::of(1L, t.prec()) / t); }

} // namespace detail

// Goldbach/Euler parametrization of x^y = y^x: x(t) = (1+1/t)^t rises to e,
// y(t) = (1+1/t)^(t+1) falls to e, and y/x = 1+1/t.
inline Real x_of_t(const Real& t_in, const Precision& p) {
    if (!(t_in > 0)) throw domain_error("x_of_t: t must be positive");
    const Real t = with_prec(t_in, p.working());
    return with_prec(exp(detail::log_x_of_t(t)), p.bits);
}

inline Real y_of_t(const Real& t_in, const Precision& p) {
    if (!(t_in > 0)) throw domain_error("y_of_t: t must be positive");
    const Real t = with_prec(t_in, p.working());
    return with_prec(exp((t + 1) * log1p(Real::of(1L, p.working()) / t)), p.bits);
}

struct CurveSolution {
    Real t, x, y;
};

// Unique t with x(t)^y(t) = A, for A above e^e; z(t) = x(t)^y(t) decreases
// strictly from +inf to e^e, so doubling/halving from t=1 brackets the root.
inline CurveSolution solve_curve(const Real& A_in, const Precision& p) {
    const long w = p.working();
    const Real A = with_prec(A_in, w);
    const Real floor_z = const_at(Constant::e_to_e, w);
    if (!(A > 0) || !(A - floor_z > pow2(-p.bits / 2, w)))
        throw domain_error("solve_curve: A must exceed e^e = " + to_string(floor_z, 7));

    const Real lnA = log(A);
    auto F = [&](const Real& t) {
        // ln z(t) = y(t) * ln x(t), strictly decreasing in t.
        Real lx = detail::log_x_of_t(t);
        Real y = exp((t + 1) * log1p(Real::of(1L, t.prec()) / t));
        return y * lx - lnA;
    };

    Real t_lo = Real::of(1L, w), t_hi = Real::of(1L, w);
    int s1 = sign(F(t_lo));
    if (s1 == 0) return {Real::of(1L, p.bits), x_of_t(Real::of(1L, w), p), y_of_t(Real::of(1L, w), p)};
    int steps = 0;
    if (s1 > 0) {  // A < 16: root lies at t > 1
        while (sign(F(t_hi)) > 0) {
            t_hi = ldexp(t_hi, 1);
            if (++steps > 64) throw convergence_error("solve_curve: bracketing exceeded 2^64");
        }
    } else {  // A > 16: root lies at t < 1
        while (sign(F(t_lo)) < 0) {
            t_lo = ldexp(t_lo, -1);
            if (++steps > 64) throw convergence_error("solve_curve: bracketing exceeded 2^-64");
        }
    }
    Real t = find_root_monotone(F, {t_lo, t_hi}, p);
    Real tw = with_prec(t, w);
    return {t, x_of_t(tw, p), y_of_t(tw, p)};
}

} // namespace expsolve
