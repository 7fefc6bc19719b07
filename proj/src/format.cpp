#include "nicholson/format.hpp"

#include <charconv>
#include <cmath>

namespace nicholson {

namespace {

int significant_digits(const std::string& s) {
  int digits = 0;
  bool leading = true;
  for (char ch : s) {
    if (ch == 'e' || ch == 'E') break;
    if (ch < '0' || ch > '9') continue;
    if (leading && ch == '0') continue;
    leading = false;
    ++digits;
  }
  return digits;
}

}  // namespace

std::string format_number(double v, int precision) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";

  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  std::string out(buf, res.ptr);
  if (precision > 0 && significant_digits(out) > precision) {
    res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
    out.assign(buf, res.ptr);
  }
  if (out.find_first_of(".e") == std::string::npos) out += ".0";
  return out;
}

}  // namespace nicholson
