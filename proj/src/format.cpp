#include "hstik/format.hpp"

#include <cstdio>
#include <cstdlib>

#include "hstik/errors.hpp"

namespace hstik {

std::string format_sci(double value) {
  char buf[64];
  const int len = std::snprintf(buf, sizeof buf, "%.6e", value);
  return std::string(buf, static_cast<std::size_t>(len));
}

double parse_number(const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') throw InvalidParameter("parse_number: not a number: " + text);
  return value;
}

}  // namespace hstik
