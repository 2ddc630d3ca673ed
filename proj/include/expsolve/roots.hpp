#pragma once

#include <algorithm>
#include <utility>

#include "expsolve/errors.hpp"
#include "expsolve/precision.hpp"
#include "expsolve/real.hpp"

namespace expsolve {

// Endpoints enclosing exactly one sign change of the target function.
struct Bracket {
    Real lo, hi;
};

// Bracketed bisection for a continuous, strictly monotone f. Accepts a root
// once the bracket is narrower than 2^-bits AND the residual is below
// 2^-(bits-guard) * scale, where scale is taken from the initial endpoint
// values (both criteria together avoid false convergence on flat stretches).
// Bisection never leaves the bracket; working precision gets the bracket
// magnitude's exponent added so the width target stays representable.
template <typename F>
Real find_root_monotone(F&& f, const Bracket& bracket, const Precision& p,
                        long* iterations_out = nullptr) {
    long mag = 0;
    if (!is_zero(bracket.lo)) mag = std::max(mag, exponent(bracket.lo));
    if (!is_zero(bracket.hi)) mag = std::max(mag, exponent(bracket.hi));
    const long w = p.working() + mag;

    Real lo = with_prec(bracket.lo, w), hi = with_prec(bracket.hi, w);
    if (!(lo < hi)) throw domain_error("find_root_monotone: need lo < hi");
    Real flo = f(lo);
    if (sign(flo) == 0) return with_prec(lo, p.bits);
    Real fhi = f(hi);
    if (sign(fhi) == 0) return with_prec(hi, p.bits);

    Real scale = abs(flo) > abs(fhi) ? abs(flo) : abs(fhi);
    if (scale < 1) scale = Real::of(1L, w);
    const Real tol_width = pow2(-p.bits, w);
    const Real tol_resid = pow2(-(p.bits - p.guard), w) * scale;

    if (sign(flo) == sign(fhi)) {
        // An endpoint whose residual is already inside the tolerance counts
        // as the root: the sign of a near-zero endpoint value is not stable
        // across precisions, so insisting on a strict straddle would reject
        // brackets that in fact pinch the root.
        if (abs(flo) <= tol_resid && abs(flo) <= abs(fhi)) return with_prec(lo, p.bits);
        if (abs(fhi) <= tol_resid) return with_prec(hi, p.bits);
        throw domain_error("find_root_monotone: bracket does not straddle a sign change");
    }

    const long budget = exponent(hi - lo) + p.bits + p.guard + 64;
    long iter = 0;
    while (iter++ < budget) {
        Real mid = ldexp(lo + hi, -1);
        if (!(lo < mid && mid < hi)) break;  // interval exhausted at this precision
        Real fm = f(mid);
        if (sign(fm) == 0) {
            if (iterations_out) *iterations_out = iter;
            return with_prec(mid, p.bits);
        }
        if (hi - lo < tol_width && abs(fm) <= tol_resid) {
            if (iterations_out) *iterations_out = iter;
            return with_prec(mid, p.bits);
        }
        if (sign(fm) == sign(flo)) {
            lo = std::move(mid);
            flo = std::move(fm);
        } else {
            hi = std::move(mid);
            fhi = std::move(fm);
        }
    }

    // Stalled: settle for the endpoint with the smaller residual if it meets
    // the tolerance; otherwise the function is too steep for this precision.
    Real best = abs(flo) <= abs(fhi) ? lo : hi;
    Real fbest = abs(flo) <= abs(fhi) ? flo : fhi;
    if (abs(fbest) <= tol_resid) {
        if (iterations_out) *iterations_out = iter;
        return with_prec(best, p.bits);
    }
    throw convergence_error("find_root_monotone: did not reach the residual tolerance");
}

} // namespace expsolve
