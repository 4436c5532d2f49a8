#pragma once

#include <string>

namespace hstik {

/// printf-style "%.6e", the numeric format of every emitted report.
std::string format_sci(double value);

/// Parse a number written by format_sci (or any strtod-compatible text).
/// Throws InvalidParameter on trailing garbage.
double parse_number(const std::string& text);

}  // namespace hstik
