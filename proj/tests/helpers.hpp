#pragma once

#include <string>

#include "expsolve/expsolve.hpp"

namespace testutil {

using namespace expsolve;

inline Real tolerance(long log2_tol, long bits = 192) { return pow2(log2_tol, bits); }

inline bool approx(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol; }

inline bool approx_rel(const Real& a, const Real& b, const Real& rel) {
    Real scale = abs(a) > abs(b) ? abs(a) : abs(b);
    if (is_zero(scale)) return true;
    return abs(a - b) <= rel * scale;
}

// Printed-value convention: a computed V matches a truncated print P with
// k digits after the decimal point iff |V - P| <= 10^(1-k).
inline bool matches_printed(const Real& v, const std::string& printed) {
    long after_point = 0;
    auto dot = printed.find('.');
    if (dot != std::string::npos) after_point = static_cast<long>(printed.size() - dot - 1);
    Real p = Real::parse(printed, 192);
    Real tol = pow(Real::of(10L, 192), Real::of(1 - after_point, 192));
    return abs(v - p) <= tol;
}

} // namespace testutil
