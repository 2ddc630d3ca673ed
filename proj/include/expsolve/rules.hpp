#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace expsolve {

// Catalog of the classification rules the verdict engine may cite. Every
// verdict lists the ids of the rules that justify it; the engine never
// concludes anything outside this table.
struct RuleInfo {
    std::string_view id;
    std::string_view statement;
};

inline constexpr RuleInfo kRuleCatalog[] = {
    {"hermite-lindemann",
     "e^a is transcendental for every nonzero algebraic a (Hermite-Lindemann)."},
    {"gelfond-schneider",
     "a^b is transcendental when a is algebraic, a != 0, 1, and b is an algebraic irrational "
     "(Gelfond-Schneider)."},
    {"rational-literal", "the expression denotes an exact rational number."},
    {"quadratic-surd",
     "a + b*sqrt(d) with rational a, b != 0 and squarefree d >= 2 is algebraic of degree 2, "
     "hence irrational."},
    {"root-extraction",
     "r^(p/q) in lowest terms is rational exactly when r is a perfect q-th power; the root is "
     "then extracted exactly by unique factorization."},
    {"rational-power-irrational",
     "when r is not a perfect q-th power, r^(p/q) (lowest terms, q > 1) is an algebraic "
     "irrational."},
    {"surd-powers-irrational",
     "no positive integer power of a + b*sqrt(d) with a, b != 0 is rational: a rational power "
     "would equal its conjugate power, forcing a + b*sqrt(d) = +-(a - b*sqrt(d))."},
    {"exp-powers-irrational",
     "every positive integer power of e^r (r rational nonzero) is transcendental, hence "
     "irrational (Hermite-Lindemann)."},
    {"exact-evaluation", "the value is computed exactly in rational arithmetic."},
    {"substitution-witness", "the reported root satisfies the equation by direct substitution."},
    {"qq-irrational",
     "Q^Q is irrational for every rational non-integer Q: if (a/b)^(a/b) were rational, unique "
     "factorization would force b = 1."},
    {"qq-nonreal",
     "for negative rational Q with even denominator, Q^Q involves an even root of -1 and is "
     "not real."},
    {"qqq-transcendental",
     "Q^(Q^Q) is transcendental for rational non-integer Q with Q^Q real: Q^Q is an algebraic "
     "irrational, so Gelfond-Schneider applies to the outer power."},
    {"xx-no-solution",
     "x^x = y has no positive solution when y < e^(-1/e) = 0.69220...; x^x attains its minimum "
     "e^(-1/e) at x = 1/e."},
    {"xx-perfect-tower", "x^x = n^n has the rational root x = n."},
    {"xx-rational-not-nn",
     "if T^T = A with A rational but not of the form n^n, then T is transcendental: T cannot "
     "be rational (Q^Q never equals such an A), and Gelfond-Schneider excludes algebraic "
     "irrational T."},
    {"xx-algebraic-powers",
     "if T^T = A where every positive integer power of A is an algebraic irrational, then T is "
     "transcendental: an algebraic T would be rational m/n by Gelfond-Schneider, making A^n "
     "rational."},
    {"xx-exp-tower",
     "if T^T = e^r with r rational nonzero, then T is transcendental: an algebraic T would "
     "give e^(r/T) = T, contradicting Hermite-Lindemann."},
    {"qq-shared-value",
     "if T^T = Q^Q with 0 < T != Q < 1 and Q rational, then T is transcendental exactly when "
     "1/Q is not a coordinate x(n) or y(n) of an integer-parameter point of x^y = y^x; "
     "otherwise T is the reciprocal of the partner coordinate."},
    {"curve-threshold",
     "x^y = y^x = z with 0 < x < y requires z > e^e = 15.15426...; below that no such pair "
     "exists."},
    {"curve-parametrization",
     "all solutions with 0 < x < y are x(t) = (1+1/t)^t, y(t) = (1+1/t)^(t+1) for t > 0; "
     "z(t) = x(t)^y(t) decreases strictly to e^e, so each z > e^e is hit exactly once."},
    {"curve-rational-points",
     "x(t) and y(t) are both algebraic iff t is rational, both rational iff t is a positive "
     "integer; for integer t the common value x^y is algebraic, for non-integer rational t "
     "the coordinates are irrational algebraic and the value is transcendental."},
    {"curve-sixteen",
     "2^4 = 4^2 = 16, at t = 1; this is the only rational value of x(n)^y(n) over integer n."},
    {"curve-integer-not-16",
     "if T^R = R^T = N for a positive integer N != 16 and T != R, then at least one of T, R "
     "is transcendental."},
    {"curve-algebraic-powers",
     "if T^R = R^T = A with T != R and every positive integer power of A is an algebraic "
     "irrational, then at least one of T, R is transcendental."},
    {"curve-exp",
     "if T^R = R^T = e^r (r rational nonzero) with T != R, then at least one of T, R is "
     "transcendental: algebraic T, R would be rational, making e^r rational."},
    {"schanuel-upgrade",
     "assuming Schanuel's conjecture, 'at least one transcendental' strengthens to 'both "
     "transcendental'; verdicts so obtained are conditional."},
    {"tower-domain",
     "the tower x, x^x, x^(x^x), ... converges exactly for e^-e = 0.06598... <= x <= "
     "e^(1/e) = 1.44466...."},
    {"tower-identity",
     "the tower limit satisfies x^h(x) = h(x), hence x = h(x)^(1/h(x)): h is a partial "
     "inverse of g(u) = u^(1/u), with h(x) in [1/e, e]."},
    {"tower-g-inverse",
     "h(g(u)) = u for 1/e <= u <= e; in particular h(q^(1/q)) = q for rational q in that "
     "interval, and h(g(u)) < u for u > e."},
    {"tower-rational",
     "for rational A in the convergence interval, h(A) is transcendental unless A is 1/4 or 1 "
     "(h(1/4) = 1/2, h(1) = 1): 1/A = (1/h)^(1/h) reduces the claim to the x^x rules."},
    {"tower-algebraic-powers",
     "if every positive integer power of A is an algebraic irrational and the tower at A "
     "converges, then h(A) is transcendental."},
    {"tower-exp",
     "h(e^r) is transcendental for rational r != 0 with e^r in the convergence interval: "
     "x^y = y becomes e^(ry) = y and Hermite-Lindemann applies."},
    {"tower-inverse-power",
     "for an algebraic irrational B in (1/e, e), T = 1/B^B is transcendental "
     "(Gelfond-Schneider) while h(T) = 1/B is algebraic."},
    {"tower-fix-rational",
     "the rational solutions of Q^(Q^y) = y with Q, y > 0 are exactly y = 1/2 and y = 1/4 at "
     "Q = 1/16, and y = 1/n at Q = 1/n^n."},
    {"tower-odd-even-split",
     "below e^-e the odd- and even-height towers have distinct limits h_o < h_e satisfying "
     "x^(h_e) = h_o and x^(h_o) = h_e; from e^-e on they coincide with h."},
    {"tower-odd-even-sixteen", "h_o(1/16) = 1/4 and h_e(1/16) = 1/2."},
    {"tower-odd-even-irrational",
     "for rational Q < e^-e with Q != 1/16, h_o(Q) and h_e(Q) are both irrational and at "
     "least one of them is transcendental."},
};

inline std::span<const RuleInfo> rule_catalog() { return kRuleCatalog; }

inline std::optional<RuleInfo> find_rule(std::string_view id) {
    for (const auto& r : kRuleCatalog)
        if (r.id == id) return r;
    return std::nullopt;
}

} // namespace expsolve
