#include <doctest.h>

#include <cmath>
#include <limits>
#include <string>

#include "nicholson/format.hpp"

using nicholson::format_number;

TEST_CASE("integral values keep a decimal point") {
  CHECK(format_number(1.0) == "1.0");
  CHECK(format_number(0.0) == "0.0");
  CHECK(format_number(-3.0) == "-3.0");
  CHECK(format_number(1000.0) == "1000.0");
}

TEST_CASE("short values print in shortest round-trip form") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(-2.5) == "-2.5");
  CHECK(format_number(4.7402, 5) == "4.7402");
}

TEST_CASE("long values are rounded to the requested precision") {
  CHECK(format_number(0.002614463961695188, 17) == "0.002614463961695188");
  CHECK(format_number(0.002614463961695188, 15) == "0.00261446396169519");
  CHECK(format_number(1.0 / 3.0, 5) == "0.33333");
  CHECK(format_number(2.0 / 3.0, 3) == "0.667");
}

TEST_CASE("shortest form round-trips at full precision") {
  for (double v : {0.1 + 0.2, 1.0 / 7.0, 6.02214076e23, 1.602176634e-19, -1e-300}) {
    CHECK(std::stod(format_number(v, 17)) == v);
  }
}

TEST_CASE("exponent form") {
  CHECK(format_number(1e-20) == "1e-20");
  CHECK(format_number(1.5e300) == "1.5e+300");
}

TEST_CASE("non-finite values") {
  CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
}
