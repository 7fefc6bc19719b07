#include "nicholson/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "nicholson/errors.hpp"
#include "nicholson/special_core.hpp"

namespace nicholson {

namespace {

constexpr double kPi = std::numbers::pi;
const double kCbrt2 = std::cbrt(2.0);

}  // namespace

TransitionCoord z_coord(double n, double x) {
  if (!(x > 0.0) || !std::isfinite(x) || !std::isfinite(n)) {
    throw DomainError("z_coord: x must be finite and positive");
  }
  const double scale = std::cbrt(x / 2.0);
  return {(n - x) / scale, scale};
}

OlverCoord OlverCoord::from_argument(double nu, double x) {
  if (!(nu > 0.0)) throw DomainError("OlverCoord: nu must be positive");
  return {nu, (x - nu) / std::cbrt(nu)};
}

double OlverCoord::argument() const { return nu + a * std::cbrt(nu); }

double f1_bessel(double n, double x) {
  const auto c = z_coord(n, x);
  return airy_ai(c.z).value / c.scale;
}

double f2_bessel_prime(double n, double x) {
  const auto c = z_coord(n, x);
  return -airy_ai_prime(c.z).value / (c.scale * c.scale);
}

double f3_lommel(double n, double x) {
  const auto c = z_coord(n, x);
  return -(kPi / 2.0) * scorer_gi(c.z).value / c.scale;
}

double f4_lommel_prime(double n, double x) {
  const auto c = z_coord(n, x);
  return (kPi / 2.0) * scorer_gi_prime(c.z).value / (c.scale * c.scale);
}

double olver_two_term_j(double nu, double a) {
  if (!(nu > 0.0)) throw DomainError("olver_two_term_j: nu must be positive");
  const double arg = -kCbrt2 * a;
  const double p0 = 1.0;
  const double q0 = 0.3 * a * a;
  return kCbrt2 / std::cbrt(nu) * airy_ai(arg).value * p0 +
         kCbrt2 * kCbrt2 / nu * airy_ai_prime(arg).value * q0;
}

double olver_two_term_jprime(double nu, double a) {
  if (!(nu > 0.0)) throw DomainError("olver_two_term_jprime: nu must be positive");
  const double arg = -kCbrt2 * a;
  const double r0 = 1.0;
  const double s0 = 0.6 * a * a * a - 0.2;
  const double nu13 = std::cbrt(nu);
  return -kCbrt2 * kCbrt2 / (nu13 * nu13) * airy_ai_prime(arg).value * r0 +
         kCbrt2 / (nu * nu13) * airy_ai(arg).value * s0;
}

}  // namespace nicholson
