#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nicholson/asymptotics.hpp"
#include "nicholson/bessel_oracle.hpp"
#include "nicholson/errors.hpp"
#include "nicholson/special_core.hpp"

using namespace nicholson;

namespace {

constexpr double kPi = std::numbers::pi;

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("transition coordinate") {
  const TransitionCoord at_front = z_coord(20.0, 20.0);
  CHECK(at_front.z == 0.0);
  CHECK(at_front.scale == doctest::Approx(std::cbrt(10.0)).epsilon(1e-15));

  const TransitionCoord c = z_coord(10.0, 16.0);
  CHECK(c.scale == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(c.z == doctest::Approx(-3.0).epsilon(1e-15));

  CHECK(z_coord(12.0, 2.0).z > 0.0);
  CHECK_THROWS_AS(z_coord(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(z_coord(1.0, -1.0), DomainError);
  CHECK_THROWS_AS(z_coord(NAN, 1.0), DomainError);
  CHECK_THROWS_AS(z_coord(1.0, INFINITY), DomainError);
}

TEST_CASE("approximants recompose from Airy and Scorer values") {
  for (double n : {2.0, 6.5, 40.0, 1000.0}) {
    for (double x : {0.5 * n, n, n + 3.0, 1.7 * n}) {
      const TransitionCoord tc = z_coord(n, x);
      const double s = tc.scale;
      CHECK(f1_bessel(n, x) == doctest::Approx(airy_ai(tc.z).value / s).epsilon(1e-15));
      CHECK(f2_bessel_prime(n, x) ==
            doctest::Approx(-airy_ai_prime(tc.z).value / (s * s)).epsilon(1e-15));
      CHECK(f3_lommel(n, x) ==
            doctest::Approx(-0.5 * kPi * scorer_gi(tc.z).value / s).epsilon(1e-15));
      CHECK(f4_lommel_prime(n, x) ==
            doctest::Approx(0.5 * kPi * scorer_gi_prime(tc.z).value / (s * s)).epsilon(1e-15));
    }
  }
}

TEST_CASE("approximant signs at the transition point") {
  for (double n : {2.0, 20.0, 200.0}) {
    CHECK(f1_bessel(n, n) > 0.0);
    CHECK(f2_bessel_prime(n, n) > 0.0);
    CHECK(f3_lommel(n, n) < 0.0);
    CHECK(f4_lommel_prime(n, n) > 0.0);
  }
}

TEST_CASE("F1 at a very large order") {
  CHECK(rel_diff(f1_bessel(5000000.2, 5000000.1), 0.002614463961695188) < 1e-12);
}

TEST_CASE("approximants converge to the exact functions as n grows") {
  double prev_j = INFINITY;
  double prev_jp = INFINITY;
  for (int n : {10, 100, 1000}) {
    const double x = n;
    const double ej = std::abs(f1_bessel(n, x) - oracle::bessel_j_series(n, x)) /
                      std::abs(oracle::bessel_j_series(n, x));
    const double ejp = std::abs(f2_bessel_prime(n, x) - oracle::bessel_j_prime_series(n, x)) /
                       std::abs(oracle::bessel_j_prime_series(n, x));
    CHECK(ej < prev_j);
    CHECK(ejp < prev_jp);
    prev_j = ej;
    prev_jp = ejp;
  }
  CHECK(prev_j < 1e-3);
}

TEST_CASE("approximants depend on c and t only through ct") {
  for (double c : {0.25, 1.0, 3.0}) {
    const double t = 12.0 / c;
    CHECK(f1_bessel(10.0, c * t) == f1_bessel(10.0, 12.0));
    CHECK(f3_lommel(10.0, c * t) == f3_lommel(10.0, 12.0));
  }
}

TEST_CASE("large-order coordinate") {
  const OlverCoord o = OlverCoord::from_argument(1000.0, 1000.0 + 10.0 * 2.5);
  CHECK(o.a == doctest::Approx(2.5).epsilon(1e-13));
  CHECK(o.argument() == doctest::Approx(1025.0).epsilon(1e-15));
  CHECK_THROWS_AS(OlverCoord::from_argument(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(olver_two_term_j(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(olver_two_term_jprime(-1.0, 1.0), DomainError);
}

TEST_CASE("two-term expansion at a = 0 reduces to the Airy constants") {
  const double nu = 500.0;
  const double ai0 = airy_ai(0.0).value;
  const double aip0 = airy_ai_prime(0.0).value;
  CHECK(olver_two_term_j(nu, 0.0) ==
        doctest::Approx(std::cbrt(2.0) * ai0 / std::cbrt(nu)).epsilon(1e-14));
  const double expected =
      -std::cbrt(4.0) * aip0 / std::pow(nu, 2.0 / 3.0) - 0.2 * std::cbrt(2.0) * ai0 / std::pow(nu, 4.0 / 3.0);
  CHECK(olver_two_term_jprime(nu, 0.0) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("two-term expansion against the series oracle") {
  const double nu = 1e4;
  const double x = OlverCoord{nu, 1.0}.argument();
  CHECK(rel_diff(olver_two_term_j(nu, 1.0), oracle::bessel_j_series(10000, x)) < 1e-3);

  const double xp = OlverCoord{nu, 0.5}.argument();
  const double h = 1e-3;
  const double fd = (oracle::bessel_j_series(10000, xp + h) - oracle::bessel_j_series(10000, xp - h)) / (2 * h);
  CHECK(rel_diff(olver_two_term_jprime(nu, 0.5), fd) < 1e-2);
}

TEST_CASE("difference between the two-term expansion and F1 shrinks with order") {
  double prev = INFINITY;
  for (double nu : {1e2, 1e3, 1e4}) {
    const double d = std::abs(olver_two_term_j(nu, 1.0) - f1_bessel(nu, nu + std::cbrt(nu)));
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("chain rule at the transition point") {
  // At x = n: dz/dx = -1/s and ds/dx = s/(3x), so dF1/dx = F2 - F1/(3x).
  for (double t : {1e2, 1e3, 1e4}) {
    const double h = 1e-3 * std::cbrt(t / 2.0);
    const double fd = (f1_bessel(t, t + h) - f1_bessel(t, t - h)) / (2 * h);
    const double expected = f2_bessel_prime(t, t) - f1_bessel(t, t) / (3.0 * t);
    CHECK(rel_diff(fd, expected) < 1e-4);
  }
}

TEST_CASE("approximants accept non-integer orders") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(1.0, 60.0);
  for (int i = 0; i < 10; ++i) {
    const double n = u(rng);
    CHECK(std::isfinite(f1_bessel(n, n + 0.3)));
    CHECK(std::isfinite(f4_lommel_prime(n, n + 0.3)));
  }
}
