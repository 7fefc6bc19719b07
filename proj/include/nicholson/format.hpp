#pragma once

#include <string>

namespace nicholson {

/// Locale-independent decimal text for v. Uses the shortest round-trip form
/// when it needs at most `precision` significant digits, otherwise rounds to
/// `precision` digits. Integral values keep a ".0" suffix.
std::string format_number(double v, int precision = 15);

}  // namespace nicholson
