#include "nicholson/special_core.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "nicholson/quadrature.hpp"

namespace nicholson {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Stop tolerances for panel doubling.
constexpr double kContourTol = 1e-13;
constexpr double kFiniteTol = 1e-12;

// exp(-41.5) < 1e-18: the ray is cut where the integrand envelope falls
// below this.
constexpr double kTailExponent = 41.5;

struct ContourValue {
  cplx value;
  double abs_err = 0.0;
};

void require_finite(double z, const char* fn) {
  if (!std::isfinite(z)) {
    throw DomainError(std::string(fn) + ": argument must be finite");
  }
}

// int_0^inf y^m exp(i(z y + y^3/3)) dy for m = 0 or 1.
ContourValue cubic_phase_integral(double z, int m) {
  const double y0 = z < 0.0 ? std::sqrt(-z) : 0.0;
  // Linear coefficient of the phase expanded about y0: z + y0^2.
  const double slope = z < 0.0 ? 0.0 : z;
  const double phase0 = z < 0.0 ? y0 * (z + y0 * y0 / 3.0) : 0.0;

  ContourValue out;

  if (y0 > 0.0) {
    auto segment = [z, m](double y) {
      const double phase = y * (z + y * y / 3.0);
      const cplx e(std::cos(phase), std::sin(phase));
      return m == 0 ? e : y * e;
    };
    const int panels = 1 + static_cast<int>(std::ceil(-z * y0 / (4.0 * kPi)));
    auto est = quad::doubling(segment, 0.0, y0, panels, kContourTol);
    out.value += est.value;
    out.abs_err += est.abs_err;
  }

  const double sin60 = std::sqrt(3.0) / 2.0;
  double rho_max = 0.25;
  for (; rho_max < 8.0; rho_max += 0.25) {
    const double decay = slope * rho_max / 2.0 + y0 * sin60 * rho_max * rho_max +
                         rho_max * rho_max * rho_max / 3.0;
    const double growth = m == 0 ? 0.0 : std::log(std::max(1.0, y0 + rho_max));
    if (decay - growth >= kTailExponent) break;
  }

  const cplx dir = std::polar(1.0, kPi / 6.0);
  auto ray = [y0, slope, m, dir](double rho) {
    const cplx w = rho * dir;
    const cplx w2 = w * w;
    const cplx e = std::exp(cplx(0.0, 1.0) * (slope * w + y0 * w2 + w2 * w / 3.0)) * dir;
    return m == 0 ? e : (y0 + w) * e;
  };
  const double ray_phase = sin60 * slope * rho_max + 0.5 * y0 * rho_max * rho_max;
  const int ray_panels = 4 + static_cast<int>(std::ceil(ray_phase / (4.0 * kPi)));
  auto est = quad::doubling(ray, 0.0, rho_max, ray_panels, kContourTol);
  out.value += std::polar(1.0, phase0) * est.value;
  out.abs_err += est.abs_err + std::exp(-kTailExponent);
  return out;
}

ContourValue contour_or_throw(double z, int m, const char* fn) {
  require_finite(z, fn);
  try {
    return cubic_phase_integral(z, m);
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(std::string(fn) + ": " + e.what(), e.partial());
  }
}

// Composite Gauss-Legendre for a smooth oscillatory integrand on [0, length]
// whose phase changes at most `phase_rate` radians per unit.
template <class F>
EvalResult finite_oscillatory(F&& f, double length, double phase_rate, const char* fn) {
  const int panels = 1 + static_cast<int>(std::ceil(phase_rate * length / (4.0 * kPi)));
  try {
    auto est = quad::doubling(f, 0.0, length, panels, kFiniteTol);
    return {est.value, est.abs_err};
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(std::string(fn) + ": " + e.what(), e.partial());
  }
}

void require_even(const Order& n, const char* fn) {
  if (n.n % 2 != 0) {
    throw ParityError(std::string(fn) + ": s_{0,n} is defined for even n only, got n = " +
                      std::to_string(n.n));
  }
}

}  // namespace

Order::Order(int order) : n(order) {
  if (order < 0) {
    throw DomainError("order must be non-negative, got " + std::to_string(order));
  }
}

Order Order::even(int order) {
  Order o(order);
  o.parity_required = true;
  if (order % 2 != 0) {
    throw ParityError("order must be even, got " + std::to_string(order));
  }
  return o;
}

Argument::Argument(double value) : x(value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw DomainError("argument must be finite and non-negative");
  }
}

AiryScorerPair airy_scorer(double z) {
  const auto c = contour_or_throw(z, 0, "airy_ai");
  const double err = c.abs_err / kPi;
  return {{c.value.real() / kPi, err}, {c.value.imag() / kPi, err}};
}

AiryScorerPair airy_scorer_prime(double z) {
  const auto c = contour_or_throw(z, 1, "airy_ai_prime");
  const double err = c.abs_err / kPi;
  return {{-c.value.imag() / kPi, err}, {c.value.real() / kPi, err}};
}

EvalResult airy_ai(double z) { return airy_scorer(z).ai; }
EvalResult airy_ai_prime(double z) { return airy_scorer_prime(z).ai; }
EvalResult scorer_gi(double z) { return airy_scorer(z).gi; }
EvalResult scorer_gi_prime(double z) { return airy_scorer_prime(z).gi; }

EvalResult bessel_j(Order n, Argument x) {
  const double order = n.n;
  const double arg = x.x;
  auto r = finite_oscillatory(
      [order, arg](double t) { return std::cos(order * t - arg * std::sin(t)); }, kPi,
      order + arg, "bessel_j");
  return {r.value / kPi, r.abs_err_est / kPi};
}

EvalResult bessel_j_prime(Order n, Argument x) {
  const double order = n.n;
  const double arg = x.x;
  auto r = finite_oscillatory(
      [order, arg](double t) { return std::sin(t) * std::sin(order * t - arg * std::sin(t)); },
      kPi, order + arg, "bessel_j_prime");
  return {r.value / kPi, r.abs_err_est / kPi};
}

EvalResult lommel_s0(Order n, Argument x) {
  require_even(n, "lommel_s0");
  const double order = n.n;
  const double arg = x.x;
  return finite_oscillatory(
      [order, arg](double t) { return std::cos(order * t) * std::sin(arg * std::sin(t)); },
      kPi / 2.0, order + arg, "lommel_s0");
}

EvalResult lommel_s0_prime(Order n, Argument x) {
  require_even(n, "lommel_s0_prime");
  const double order = n.n;
  const double arg = x.x;
  return finite_oscillatory(
      [order, arg](double t) {
        const double s = std::sin(t);
        return std::cos(order * t) * s * std::cos(arg * s);
      },
      kPi / 2.0, order + arg, "lommel_s0_prime");
}

}  // namespace nicholson
