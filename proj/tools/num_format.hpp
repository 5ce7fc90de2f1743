#pragma once

#include <charconv>
#include <string>

namespace decogas::cli {

/// Locale-independent scientific rendering with a fixed number of significant
/// digits, e.g. format_sci(0.01, 9) -> "1.00000000e-02".
inline std::string format_sci(double v, int significant_digits) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, significant_digits - 1);
  return std::string(buf, res.ptr);
}

/// Shortest round-trip rendering, used for identifiers such as file names and
/// column labels.
inline std::string format_shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace decogas::cli
