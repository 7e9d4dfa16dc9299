#include "pqd/format.hpp"

#include <charconv>
#include <string>

namespace pqd {

std::string format_value(double v) {
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[40];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::string format_value(int v) { return std::to_string(v); }

std::string format_value(long long v) { return std::to_string(v); }

} // namespace pqd
