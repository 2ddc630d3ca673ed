#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "expsolve/errors.hpp"
#include "expsolve/exact.hpp"
#include "expsolve/expr.hpp"
#include "expsolve/precision.hpp"
#include "expsolve/real.hpp"
#include "expsolve/rules.hpp"
#include "expsolve/solvers.hpp"
#include "expsolve/tower.hpp"

// The verdict engine: applies the rule catalog to the symbolic forms and
// produces arithmetic-nature verdicts with citations. Unknown is a
// first-class answer — the engine cites rules, it does not guess.

namespace expsolve {

enum class Nature {
    rational_value,
    algebraic_irrational,
    transcendental,
    irrational_unknown,
    at_least_one_transcendental,
    conditionally_transcendental,
    unknown,
    out_of_domain,
};

inline std::string_view nature_name(Nature n) {
    switch (n) {
        case Nature::rational_value: return "rational";
        case Nature::algebraic_irrational: return "algebraic irrational";
        case Nature::transcendental: return "transcendental";
        case Nature::irrational_unknown: return "irrational (nature unknown)";
        case Nature::at_least_one_transcendental: return "at least one of the pair transcendental";
        case Nature::conditionally_transcendental: return "conditionally transcendental (Schanuel)";
        case Nature::unknown: return "unknown";
        case Nature::out_of_domain: return "out of domain";
    }
    return "?";
}

struct Verdict {
    Nature nature = Nature::unknown;
    std::vector<std::string_view> rules;     // ids into rule_catalog()
    std::optional<Rational> exact;           // set when nature == rational_value
    std::vector<NumberExpr> witnesses;       // exact expressions backing the verdict
};

struct ClassifyOptions {
    bool assume_schanuel = false;
};

namespace detail {

inline Verdict rational_verdict(Rational v, std::vector<std::string_view> rules) {
    Verdict out{Nature::rational_value, std::move(rules), v, {Rat{v}}};
    return out;
}

inline void maybe_upgrade_schanuel(Verdict& v, const ClassifyOptions& opts) {
    if (opts.assume_schanuel && v.nature == Nature::at_least_one_transcendental) {
        v.nature = Nature::conditionally_transcendental;
        v.rules.push_back("schanuel-upgrade");
    }
}

} // namespace detail

// Nature of the expression's own value (no equation context).
inline Verdict self_nature(const NumberExpr& x) {
    if (auto* r = std::get_if<Rat>(&x)) return detail::rational_verdict(r->q, {"rational-literal"});
    if (std::holds_alternative<Surd>(x)) return {Nature::algebraic_irrational, {"quadratic-surd"}, {}, {x}};
    if (auto* rp = std::get_if<RatPow>(&x)) {
        unsigned long q = den(rp->e).convert_to<unsigned long>();
        if (auto s = rational_nth_root(rp->r, q)) {
            Int p = num(rp->e);
            if (abs(p) * (msb(height(*s)) + 1) > Int(kMaxExactBits))
                throw numeric_error("rational power exceeds the representable size cap");
            return detail::rational_verdict(pow_rational(*s, p.convert_to<long>()),
                                            {"root-extraction"});
        }
        return {Nature::algebraic_irrational, {"rational-power-irrational"}, {}, {x}};
    }
    return {Nature::transcendental, {"hermite-lindemann"}, {}, {x}};
}

// True iff x^n is irrational for every positive integer n.
//   rationals: n = 1 fails. pure surds b*sqrt(d): n = 2 fails.
//   mixed surds a + b*sqrt(d), a,b != 0: all powers irrational (conjugate
//   argument). r^(p/q): n = q fails. e^r: Hermite-Lindemann.
inline bool powers_never_rational(const NumberExpr& x) {
    if (std::holds_alternative<Rat>(x)) return false;
    if (auto* s = std::get_if<Surd>(&x)) return s->a != 0;
    if (std::holds_alternative<RatPow>(x)) return false;
    return true;  // ExpRat, r != 0 by canonical form
}

namespace detail {

// All rational s with the expression equal to g(s) = s^(1/s), detected
// exactly: r^(p/q) = s^(1/s) with r = s^k means s = q/(kp); probe k = 1..64
// on the matching sign. Pure positive surds are probed through
// b*sqrt(d) = (b^2 d)^(1/2). g is two-to-one, so up to two parameters can
// come back (e.g. 4^(1/4) = g(4) = g(2)); the caller keeps the one in the
// invertible range [1/e, e].
inline std::vector<Rational> g_form_parameters(const NumberExpr& x) {
    Rational r, e;
    if (auto* rp = std::get_if<RatPow>(&x)) {
        r = rp->r;
        e = rp->e;
    } else if (auto* s = std::get_if<Surd>(&x)) {
        if (s->a != 0 || s->b <= 0) return {};
        r = s->b * s->b * Rational(s->d);
        e = Rational(1, 2);
    } else {
        return {};
    }
    std::vector<Rational> out;
    Int p = num(e), q = den(e);
    for (long k = 1; k <= 64; ++k) {
        Rational s(q, abs(p) * k);
        if (s == 1) continue;
        long kk = p > 0 ? k : -k;
        if (pow_rational(s, kk) == r) out.push_back(std::move(s));
    }
    return out;
}

} // namespace detail

enum class XxBranch { lower, upper };

inline std::string_view branch_name(XxBranch b) { return b == XxBranch::lower ? "lower" : "upper"; }

struct XxClassification {
    std::optional<Verdict> domain;                      // set when x^x = A has no solution
    std::vector<std::pair<XxBranch, Verdict>> roots;    // lower first when both exist
};

// Verdicts for the real roots of x^x = A, following the branch structure of
// solve_x_pow_x.
inline XxClassification classify_xx_solutions(const NumberExpr& A, const Precision& p) {
    const long w = p.working();
    const Real value = eval(A, w);
    XxClassification out;
    if (!(value > 0) || value < const_at(Constant::e_to_minus_inv_e, w)) {
        out.domain = Verdict{Nature::out_of_domain, {"xx-no-solution"}, {}, {}};
        return out;
    }
    const bool two_roots = value < 1;

    Verdict sn = self_nature(A);
    if (sn.nature == Nature::rational_value) {
        const Rational& q = *sn.exact;
        if (is_integer(q) && q >= 1) {
            if (auto n = as_perfect_nn(num(q))) {
                out.roots.emplace_back(XxBranch::upper,
                                       detail::rational_verdict(Rational(*n), {"xx-perfect-tower"}));
                return out;
            }
        }
        Verdict v{Nature::transcendental, {"xx-rational-not-nn", "qq-irrational", "gelfond-schneider"}, {}, {}};
        if (two_roots) out.roots.emplace_back(XxBranch::lower, v);
        out.roots.emplace_back(XxBranch::upper, std::move(v));
        return out;
    }

    if (auto* rp = std::get_if<RatPow>(&A); rp && rp->r == rp->e && rp->r > 0) {
        // A = Q^Q syntactically. The root equal to Q is exact; the partner
        // root is settled by whether 1/Q is a coordinate of an
        // integer-parameter rational point of x^y = y^x.
        const Rational& Q = rp->r;
        if (Q > 1) {
            out.roots.emplace_back(XxBranch::upper,
                                   detail::rational_verdict(Q, {"substitution-witness"}));
            return out;
        }
        Verdict self = detail::rational_verdict(Q, {"substitution-witness"});
        XxBranch self_branch =
            Real::of(Q, w) < const_at(Constant::inv_e, w) ? XxBranch::lower : XxBranch::upper;
        Verdict partner;
        Rational invQ = 1 / Q;
        if (auto n = curve_x_index(invQ)) {
            auto [xn, yn] = curve_rational_point(*n);
            partner = detail::rational_verdict(1 / yn, {"qq-shared-value", "curve-rational-points"});
        } else if (auto m = curve_y_index(invQ)) {
            auto [xm, ym] = curve_rational_point(*m);
            partner = detail::rational_verdict(1 / xm, {"qq-shared-value", "curve-rational-points"});
        } else {
            partner = Verdict{Nature::transcendental, {"qq-shared-value", "gelfond-schneider"}, {}, {}};
        }
        if (self_branch == XxBranch::lower) {
            out.roots.emplace_back(XxBranch::lower, std::move(self));
            out.roots.emplace_back(XxBranch::upper, std::move(partner));
        } else {
            out.roots.emplace_back(XxBranch::lower, std::move(partner));
            out.roots.emplace_back(XxBranch::upper, std::move(self));
        }
        return out;
    }

    if (powers_never_rational(A)) {
        Verdict v = std::holds_alternative<ExpRat>(A)
                        ? Verdict{Nature::transcendental, {"xx-exp-tower", "hermite-lindemann"}, {}, {}}
                        : Verdict{Nature::transcendental,
                                  {"xx-algebraic-powers", "surd-powers-irrational", "gelfond-schneider"},
                                  {},
                                  {}};
        if (two_roots) out.roots.emplace_back(XxBranch::lower, v);
        out.roots.emplace_back(XxBranch::upper, std::move(v));
        return out;
    }

    Verdict unknown{Nature::unknown, {}, {}, {}};
    if (two_roots) out.roots.emplace_back(XxBranch::lower, unknown);
    out.roots.emplace_back(XxBranch::upper, std::move(unknown));
    return out;
}

// Pair-level verdict for the unique 1 < x < e < y with x^y = y^x = A.
inline Verdict classify_curve_pair(const NumberExpr& A, const Precision& p,
                                   const ClassifyOptions& opts = {}) {
    const long w = p.working();
    const Real value = eval(A, w);
    const Real floor_z = const_at(Constant::e_to_e, w);
    if (!(value > 0) || !(value - floor_z > pow2(-p.bits / 2, w)))
        return {Nature::out_of_domain, {"curve-threshold"}, {}, {}};

    Verdict sn = self_nature(A);
    Verdict out;
    if (sn.nature == Nature::rational_value) {
        const Rational& q = *sn.exact;
        if (q == 16) {
            out = Verdict{Nature::rational_value,
                          {"curve-sixteen", "curve-rational-points", "substitution-witness"},
                          {},
                          {Rat{Rational(2)}, Rat{Rational(4)}}};
            return out;
        }
        if (is_integer(q)) {
            out = Verdict{Nature::at_least_one_transcendental,
                          {"curve-integer-not-16", "curve-rational-points", "gelfond-schneider"},
                          {},
                          {}};
            detail::maybe_upgrade_schanuel(out, opts);
            return out;
        }
        return {Nature::unknown, {}, {}, {}};
    }
    if (powers_never_rational(A)) {
        out = std::holds_alternative<ExpRat>(A)
                  ? Verdict{Nature::at_least_one_transcendental,
                            {"curve-exp", "hermite-lindemann", "gelfond-schneider"},
                            {},
                            {}}
                  : Verdict{Nature::at_least_one_transcendental,
                            {"curve-algebraic-powers", "surd-powers-irrational", "gelfond-schneider"},
                            {},
                            {}};
        detail::maybe_upgrade_schanuel(out, opts);
        return out;
    }
    return {Nature::unknown, {}, {}, {}};
}

struct CurveAtT {
    NumberExpr x_exact, y_exact;  // exact coordinate forms
    Verdict coordinates;          // joint verdict about x(t), y(t)
    Verdict value;                // verdict about the common value x^y = y^x
};

// Companion entry point: classify the curve point by its parameter instead
// of its value. Integer t gives rational coordinates; non-integer rational t
// gives algebraic irrational coordinates and a transcendental value.
inline CurveAtT classify_curve_at_t(const Rational& t) {
    if (!(t > 0)) throw domain_error("classify_curve_at_t: t must be positive");
    CurveAtT out;
    if (is_integer(t)) {
        unsigned long n = num(t).convert_to<unsigned long>();
        auto [x, y] = curve_rational_point(n);
        out.x_exact = Rat{x};
        out.y_exact = Rat{y};
        out.coordinates = Verdict{Nature::rational_value,
                                  {"curve-rational-points", "curve-parametrization"},
                                  {},
                                  {Rat{x}, Rat{y}}};
        if (n == 1) {
            out.value = detail::rational_verdict(Rational(16), {"curve-sixteen"});
        } else {
            // z(n) = ((n+1)/n) ^ ((n+1)^(n+1) / n^n), irrational for n >= 2.
            Rational base(Int(n) + 1, Int(n));
            Rational expo(pow_int(Int(n) + 1, n + 1), pow_int(Int(n), n));
            NumberExpr z = make_ratpow(base, expo);
            out.value = Verdict{Nature::algebraic_irrational,
                                {"curve-rational-points", "rational-power-irrational"},
                                {},
                                {z}};
        }
        return out;
    }
    Int a = num(t), b = den(t);
    Rational base(a + b, a);
    out.x_exact = make_ratpow(base, t);
    out.y_exact = make_ratpow(base, Rational(a + b, b));
    out.coordinates = Verdict{Nature::algebraic_irrational,
                              {"curve-rational-points", "rational-power-irrational"},
                              {},
                              {out.x_exact, out.y_exact}};
    out.value = Verdict{Nature::transcendental, {"curve-rational-points", "gelfond-schneider"}, {}, {}};
    return out;
}

// Verdict about h(A), the infinite tower at A.
inline Verdict classify_tower(const NumberExpr& A, const Precision& p) {
    const long w = p.working();
    const Real value = eval(A, w);
    const Real lo = const_at(Constant::e_to_minus_e, w);
    const Real hi = const_at(Constant::e_to_inv_e, w);
    const Real band = pow2(-p.bits / 2, w);
    if (!(value > 0) || lo - value >= band || value - hi >= band)
        return {Nature::out_of_domain, {"tower-domain"}, {}, {}};

    Verdict sn = self_nature(A);
    if (sn.nature == Nature::rational_value) {
        const Rational& q = *sn.exact;
        if (q == Rational(1, 4))
            return detail::rational_verdict(Rational(1, 2), {"tower-rational", "tower-g-inverse"});
        if (q == 1) return detail::rational_verdict(Rational(1), {"tower-rational", "tower-g-inverse"});
        return {Nature::transcendental, {"tower-rational", "qq-irrational", "gelfond-schneider"}, {}, {}};
    }
    if (std::holds_alternative<ExpRat>(A))
        return {Nature::transcendental, {"tower-exp", "hermite-lindemann"}, {}, {}};
    for (const Rational& s : detail::g_form_parameters(A)) {
        Real sv = Real::of(s, w);
        if (const_at(Constant::inv_e, w) <= sv && sv <= const_at(Constant::e, w))
            return detail::rational_verdict(s, {"tower-g-inverse", "tower-identity"});
    }
    if (powers_never_rational(A))
        return {Nature::transcendental,
                {"tower-algebraic-powers", "surd-powers-irrational", "gelfond-schneider"},
                {},
                {}};
    return {Nature::unknown, {}, {}, {}};
}

struct TowerInversePower {
    Real t_value;         // T = 1/B^B, the tower's argument
    Verdict input_nature; // about T itself
    Verdict h_verdict;    // about h(T) = 1/B
};

// Companion form: given an algebraic irrational B in (1/e, e), the tower at
// T = 1/B^B lands back on an algebraic number, h(T) = 1/B.
inline TowerInversePower classify_tower_inverse_power(const NumberExpr& B, const Precision& p) {
    Verdict sn = self_nature(B);
    if (sn.nature != Nature::algebraic_irrational)
        throw domain_error("classify_tower_inverse_power: B must be an algebraic irrational");
    const long w = p.working();
    Real vB = eval(B, w);
    if (!(const_at(Constant::inv_e, w) < vB && vB < const_at(Constant::e, w)))
        throw domain_error("classify_tower_inverse_power: B must lie in (1/e, e)");
    TowerInversePower out{pow(vB, -vB),
                          Verdict{Nature::transcendental,
                                  {"tower-inverse-power", "gelfond-schneider"},
                                  {},
                                  {}},
                          Verdict{Nature::algebraic_irrational,
                                  {"tower-inverse-power", "tower-identity"},
                                  {},
                                  {reciprocal(B)}}};
    return out;
}

struct OddEvenVerdicts {
    Verdict odd, even;
    std::optional<Verdict> pair;  // joint claim about {h_o, h_e}, when any
};

// Verdicts for h_o(Q), h_e(Q) on the split range 0 < Q <= e^-e.
inline OddEvenVerdicts classify_tower_odd_even(const Rational& Q, const Precision& p,
                                               const ClassifyOptions& opts = {}) {
    if (!(Q > 0)) throw domain_error("classify_tower_odd_even: Q must be positive");
    const long w = p.working();
    if (Real::of(Q, w) - const_at(Constant::e_to_minus_e, w) >= pow2(-p.bits / 2, w)) {
        Verdict v{Nature::out_of_domain, {"tower-odd-even-split"}, {}, {}};
        return {v, v, std::nullopt};
    }
    OddEvenVerdicts out;
    if (Q == Rational(1, 16)) {
        out.odd = detail::rational_verdict(Rational(1, 4),
                                           {"tower-odd-even-sixteen", "tower-fix-rational"});
        out.even = detail::rational_verdict(Rational(1, 2),
                                            {"tower-odd-even-sixteen", "tower-fix-rational"});
        return out;
    }
    Verdict each{Nature::irrational_unknown,
                 {"tower-odd-even-irrational", "tower-fix-rational"},
                 {},
                 {}};
    Verdict pair{Nature::at_least_one_transcendental,
                 {"tower-odd-even-irrational", "gelfond-schneider"},
                 {},
                 {}};
    if (opts.assume_schanuel) {
        each.nature = Nature::conditionally_transcendental;
        each.rules.push_back("schanuel-upgrade");
    }
    detail::maybe_upgrade_schanuel(pair, opts);
    out.odd = each;
    out.even = std::move(each);
    out.pair = std::move(pair);
    return out;
}

// Verdict about Q^(Q^Q).
inline Verdict classify_qqq(const Rational& Q) {
    QQNature inner = qq_nature(Q);  // rejects Q = 0
    if (inner.tag == QQTag::NonReal)
        throw domain_error("classify_qqq: Q^Q is not real (negative base, even denominator); "
                           "rule qq-nonreal");
    if (inner.tag == QQTag::IrrationalReal)
        return {Nature::transcendental,
                {"qqq-transcendental", "qq-irrational", "gelfond-schneider"},
                {},
                {}};

    // Q is a nonzero integer; Q^(Q^Q) = Q^r with r = Q^Q rational.
    const Rational& r = *inner.value;
    if (Q > 0) {
        Int e = num(r);  // r is a positive integer here
        if (e * (msb(height(Q)) + 1) > Int(kMaxExactBits))
            throw numeric_error("classify_qqq: tower exceeds the representable size cap");
        return detail::rational_verdict(pow_rational(Q, e.convert_to<long>()),
                                        {"exact-evaluation"});
    }
    if (Q == -1) return detail::rational_verdict(Rational(-1), {"exact-evaluation"});
    // Q = -m, m >= 2: tower = (-m)^(±1/m^m).
    Int m = abs(num(Q));
    if (m % 2 == 0)
        throw domain_error("classify_qqq: (-m)^(1/m^m) involves an even root of a negative "
                           "number and is not real; rule qq-nonreal");
    // Odd m >= 3: the m^m-th root of m is irrational, so the value is a real
    // algebraic irrational, -(1/m)^(1/m^m)-style; not expressible in the
    // four-form grammar, so no witness is attached.
    return {Nature::algebraic_irrational, {"root-extraction", "rational-power-irrational"}, {}, {}};
}

// NumberExpr conveniences: expressions are lowered to reals here, at working
// precision — the numeric solvers never see syntax.
inline XxSolutions solve_x_pow_x(const NumberExpr& A, const Precision& p) {
    return solve_x_pow_x(eval(A, p.working()), p);
}
inline CurveSolution solve_curve(const NumberExpr& A, const Precision& p) {
    return solve_curve(eval(A, p.working()), p);
}
inline TowerValue tower_h(const NumberExpr& x, const Precision& p,
                          TowerMethod method = TowerMethod::fixed_point) {
    return tower_h(eval(x, p.working()), p, method);
}
inline TowerValue tower_odd_even(const NumberExpr& x, const Precision& p,
                                 TowerMethod method = TowerMethod::fixed_point) {
    return tower_odd_even(eval(x, p.working()), p, method);
}

} // namespace expsolve
