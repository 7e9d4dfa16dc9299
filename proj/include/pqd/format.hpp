#pragma once

#include <string>

namespace pqd {

inline constexpr const char* kVersion = "0.1.0";

/// Shortest decimal rendering that round-trips at 12 significant digits,
/// locale-independent ('.' decimal separator, no grouping). Negative zero
/// is normalized to "0".
std::string format_value(double v);

std::string format_value(int v);
std::string format_value(long long v);

} // namespace pqd
