#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace quinn {

// Violated mathematical precondition: bad user input, singular curve,
// inexact division, enumeration cap exceeded.  CLI maps this to exit 2.
struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken internal invariant.  Never expected on any input; CLI maps this
// to exit 3.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Cap on brute-force enumerations (field elements, curve points, monic
// polynomials).  Overridable through QUINN_ENUM_CAP; read on every call so
// tests can vary it.
inline long enumeration_cap() {
    if (const char* s = std::getenv("QUINN_ENUM_CAP")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 2500;
}

} // namespace quinn
