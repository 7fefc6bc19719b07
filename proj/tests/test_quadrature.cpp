#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nicholson/quadrature.hpp"

using namespace nicholson;

TEST_CASE("16-point Gauss-Legendre rule") {
  const auto& rule = quad::gauss_legendre16();
  double wsum = 0.0;
  for (double w : rule.weights) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));

  // Exact through degree 31.
  for (int deg : {0, 2, 10, 30}) {
    double s = 0.0;
    for (int i = 0; i < quad::kGaussPoints; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], deg);
    CHECK(s == doctest::Approx(2.0 / (deg + 1)).epsilon(1e-14));
  }
  // Symmetric and increasing.
  for (int i = 0; i < quad::kGaussPoints; ++i) {
    CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[quad::kGaussPoints - 1 - i]).epsilon(1e-15));
    if (i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
  }
}

TEST_CASE("composite and doubling rules") {
  auto f = [](double t) { return std::sin(t); };
  CHECK(quad::composite(f, 0.0, std::numbers::pi, 3) == doctest::Approx(2.0).epsilon(1e-15));

  auto est = quad::doubling([](double t) { return std::cos(40.0 * t); }, 0.0, 1.0, 1, 1e-13);
  CHECK(est.value == doctest::Approx(std::sin(40.0) / 40.0).epsilon(1e-13));
  CHECK(est.abs_err < 1e-12);

  // A jump is never resolved to rounding level.
  auto step = [](double t) { return t < 0.3 ? 0.0 : 1.0; };
  CHECK_THROWS_AS(quad::doubling(step, 0.0, 1.0, 1, 0.0, 16), ConvergenceError);
}
