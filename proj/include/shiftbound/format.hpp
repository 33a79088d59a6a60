#pragma once

#include <cstdio>
#include <string>

namespace shiftbound {

/// Numeric output convention: 12 significant digits.
inline std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace shiftbound
