#pragma once

#include "expsolve/errors.hpp"

namespace expsolve {

// Working mantissa width plus guard bits carried by intermediate steps.
// Results are rounded back to `bits`; tolerances are derived from it.
struct Precision {
    long bits;
    long guard;

    explicit Precision(long bits_ = 128, long guard_ = 16) : bits(bits_), guard(guard_) {
        if (bits < 32) throw domain_error("Precision: bits must be >= 32");
        if (guard < 16) throw domain_error("Precision: guard must be >= 16");
    }

    long working() const { return bits + guard; }
};

} // namespace expsolve
