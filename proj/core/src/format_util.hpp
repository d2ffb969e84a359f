#ifndef IODS_FORMAT_UTIL_HPP
#define IODS_FORMAT_UTIL_HPP

#include <charconv>
#include <cstdio>
#include <string>

namespace iods::detail {

/// Shortest decimal form that parses back to the same double.
inline std::string format_full(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, end);
}

/// Six significant digits, for human-readable reports.
inline std::string format_g6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return std::string(buf);
}

} // namespace iods::detail

#endif // IODS_FORMAT_UTIL_HPP
