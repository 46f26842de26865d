#pragma once

#include <cstdio>
#include <string>

namespace latbound {

// 12 significant digits, shortest form; the fixed width used by all CSV and
// tabular output so reruns are byte-identical.
inline std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Full round-trip precision; used when a file must reproduce a double exactly.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace latbound
