#pragma once

#include <optional>
#include <vector>

#include "expsolve/errors.hpp"
#include "expsolve/precision.hpp"
#include "expsolve/real.hpp"
#include "expsolve/roots.hpp"
#include "expsolve/solvers.hpp"

// The infinite power tower h(x) = x^(x^(x^...)) and the odd/even towers
// h_o, h_e. h exists exactly on [e^-e, e^(1/e)]; below e^-e the odd- and
// even-height towers split into two distinct limits with x^(h_e) = h_o and
// x^(h_o) = h_e. Evaluation is by fixed-point solving (the tower iteration
// itself slows to a crawl near the interval endpoints); direct iteration is
// kept as a second, independent method.

namespace expsolve {

enum class TowerMode { converged_h, split_odd_even, out_of_domain };
enum class TowerMethod { fixed_point, iteration };

struct TowerValue {
    TowerMode mode = TowerMode::out_of_domain;
    std::optional<Real> h;
    std::optional<Real> h_odd;
    std::optional<Real> h_even;
    long iterations = 0;
    TowerMethod method = TowerMethod::fixed_point;
    bool boundary = false;  // input within 2^(-bits/2) of a domain endpoint
};

inline constexpr long kTowerIterationCap = 1000000;

// Finite tower of the given height, built bottom-up: a1 = x, a_{k+1} = x^(a_k).
inline Real tower_iterate_raw(const Real& x_in, long height, const Precision& p) {
    if (!(x_in > 0)) throw domain_error("tower_iterate_raw: x must be positive");
    if (height < 1) throw domain_error("tower_iterate_raw: height must be >= 1");
    const Real x = with_prec(x_in, p.working());
    Real a = x;
    for (long k = 1; k < height; ++k) a = pow(x, a);
    return with_prec(a, p.bits);
}

// All roots of F(y) = x^(x^y) - y in (0,1) for 0 < x < 1: a uniform
// 4096-cell scan for sign changes, each refined by bisection. There are
// exactly three roots below e^-e and exactly one above it. The grid
// resolves the root cluster for any x >= 2^-64; far smaller x would push
// the outer roots inside one cell.
inline std::vector<Real> two_step_fixed_points(const Real& x_in, const Precision& p) {
    if (!(x_in > 0) || !(x_in < 1))
        throw domain_error("two_step_fixed_points: x must lie in (0,1)");
    const long w = p.working();
    const Real x = with_prec(x_in, w);
    const Real lnx = log(x);
    auto F = [&](const Real& y) { return exp(exp(y * lnx) * lnx) - y; };

    constexpr long cells = 4096;
    std::vector<Real> roots;
    Real y_prev = Real::of(0L, w);
    Real f_prev = x;  // F(0) = x^(x^0) - 0 = x
    for (long i = 1; i <= cells; ++i) {
        Real y = Real::of(i, w) / cells;
        Real fy = F(y);
        if (sign(fy) == 0) {
            roots.push_back(with_prec(y, p.bits));
        } else if (sign(fy) != sign(f_prev) && sign(f_prev) != 0) {
            roots.push_back(find_root_monotone(F, {y_prev, y}, p));
        }
        y_prev = std::move(y);
        f_prev = std::move(fy);
    }

    const Real split_at = const_at(Constant::e_to_minus_e, w);
    const Real band = pow2(-p.bits / 2, w);
    if (abs(x - split_at) >= band) {
        std::size_t expected = x < split_at ? 3 : 1;
        if (roots.size() != expected)
            throw convergence_error("two_step_fixed_points: unexpected root count " +
                                    std::to_string(roots.size()));
    }
    return roots;
}

namespace detail {

inline TowerValue tower_converged(const Real& x, const Precision& p, TowerMethod method,
                                  bool boundary) {
    TowerValue out;
    out.mode = TowerMode::converged_h;
    out.method = method;
    out.boundary = boundary;
    if (method == TowerMethod::fixed_point) {
        // g(h(x)) = x with h(x) in [1/e, e], so h is g's lower-branch inverse.
        out.h = g_inverse(x, GBranch::lower, p);
        out.iterations = 0;
    } else {
        // Stop once the geometric tail |a_n - h| <= d*r/(1-r) is inside the
        // tolerance, with the ratio r estimated from successive differences;
        // the raw step size alone understates the distance when r is near 1.
        const Real tol = pow2(-p.bits / 2, p.working());
        Real a = x;
        Real prev_d;
        bool have_prev = false;
        long n = 1;
        while (true) {
            Real b = pow(x, a);
            ++n;
            Real d = abs(b - a);
            bool settled = is_zero(d);
            if (!settled && have_prev && d < prev_d && d < tol)
                settled = d * d <= tol * (prev_d - d);
            a = std::move(b);
            if (settled) {
                out.h = with_prec(a, p.bits);
                out.iterations = n;
                break;
            }
            prev_d = std::move(d);
            have_prev = true;
            if (n > kTowerIterationCap)
                throw convergence_error("tower iteration did not converge within 10^6 steps");
        }
    }
    out.h_odd = out.h;
    out.h_even = out.h;
    return out;
}

inline TowerValue tower_split(const Real& x, const Precision& p, TowerMethod method,
                              bool boundary) {
    TowerValue out;
    out.mode = TowerMode::split_odd_even;
    out.method = method;
    out.boundary = boundary;
    const long w = p.working();
    const Real tol = pow2(-p.bits / 2, w);

    if (method == TowerMethod::fixed_point) {
        std::vector<Real> roots = two_step_fixed_points(x, p);
        out.h_odd = roots.front();
        out.h_even = roots.back();
        out.iterations = 0;
    } else {
        // Two interleaved sequences; each stops on the geometric-tail bound
        // d*r/(1-r) <= tol with r estimated from its own differences.
        Real odd = x;
        Real even = pow(x, odd);
        Real pd_odd, pd_even;
        bool have_prev = false;
        long n = 2;
        while (true) {
            Real next_odd = pow(x, even);
            Real next_even = pow(x, next_odd);
            n += 2;
            Real d_odd = abs(next_odd - odd);
            Real d_even = abs(next_even - even);
            bool settled_odd = is_zero(d_odd);
            bool settled_even = is_zero(d_even);
            if (have_prev) {
                if (!settled_odd && d_odd < pd_odd && d_odd < tol)
                    settled_odd = d_odd * d_odd <= tol * (pd_odd - d_odd);
                if (!settled_even && d_even < pd_even && d_even < tol)
                    settled_even = d_even * d_even <= tol * (pd_even - d_even);
            }
            odd = std::move(next_odd);
            even = std::move(next_even);
            if (settled_odd && settled_even) break;
            pd_odd = std::move(d_odd);
            pd_even = std::move(d_even);
            have_prev = true;
            if (n > kTowerIterationCap)
                throw convergence_error("tower odd/even iteration did not converge within 10^6 steps");
        }
        out.h_odd = with_prec(odd, p.bits);
        out.h_even = with_prec(even, p.bits);
        out.iterations = n;
    }

    // The two limits must exchange under one application of x^(.).
    Real ho = with_prec(*out.h_odd, w), he = with_prec(*out.h_even, w);
    if (!(ho < he) || abs(pow(with_prec(x, w), he) - ho) > tol ||
        abs(pow(with_prec(x, w), ho) - he) > tol)
        throw convergence_error("tower odd/even limits fail the exchange identities");
    return out;
}

} // namespace detail

// h(x) when the tower converges; splits into (h_o, h_e) below e^-e; reports
// out_of_domain above e^(1/e). Inputs within 2^(-bits/2) of an endpoint are
// flagged boundary and treated as inside.
inline TowerValue tower_h(const Real& x_in, const Precision& p,
                          TowerMethod method = TowerMethod::fixed_point) {
    if (!(x_in > 0)) throw domain_error("tower_h: x must be positive");
    const long w = p.working();
    const Real x = with_prec(x_in, w);
    const Real hi_thr = const_at(Constant::e_to_inv_e, w);
    const Real lo_thr = const_at(Constant::e_to_minus_e, w);
    const Real band = pow2(-p.bits / 2, w);
    const bool boundary = abs(x - hi_thr) < band || abs(x - lo_thr) < band;

    if (x - hi_thr >= band) {
        TowerValue out;
        out.mode = TowerMode::out_of_domain;
        out.method = method;
        return out;
    }
    if (lo_thr - x >= band) return detail::tower_split(x, p, method, false);
    return detail::tower_converged(x, p, method, boundary);
}

// The odd/even pair on (0, e^(1/e)]: equal limits (mode converged_h) from
// e^-e up, a strict split h_o < h_e below.
inline TowerValue tower_odd_even(const Real& x_in, const Precision& p,
                                 TowerMethod method = TowerMethod::fixed_point) {
    if (!(x_in > 0)) throw domain_error("tower_odd_even: x must be positive");
    const long w = p.working();
    const Real x = with_prec(x_in, w);
    const Real hi_thr = const_at(Constant::e_to_inv_e, w);
    const Real lo_thr = const_at(Constant::e_to_minus_e, w);
    const Real band = pow2(-p.bits / 2, w);
    if (x - hi_thr >= band)
        throw domain_error("tower_odd_even: x must lie in (0, e^(1/e)], e^(1/e) = " +
                           to_string(hi_thr, 7));
    const bool boundary = abs(x - hi_thr) < band || abs(x - lo_thr) < band;
    if (lo_thr - x >= band) return detail::tower_split(x, p, method, boundary);
    return detail::tower_converged(x, p, method, boundary);
}

} // namespace expsolve
