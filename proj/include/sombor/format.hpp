#pragma once

#include <cstdio>
#include <string>

namespace sombor {

// Formats a double with the given number of significant digits ("%.*g").
// All user-facing numeric output goes through this so that reports are
// byte-identical across runs.
inline std::string format_significant(double value, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    return buf;
}

} // namespace sombor
