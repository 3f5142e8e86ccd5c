#pragma once

#include <cstdio>
#include <string>

namespace hyperent {

// Floats are printed with 6 significant digits throughout the CSV and
// table outputs; exact rationals are printed as num/den.
inline std::string format_g6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

}  // namespace hyperent
