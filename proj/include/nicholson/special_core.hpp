#pragma once

#include "nicholson/errors.hpp"

// Exact special functions in double precision.
//
// Ai, Ai', Gi and Gi' come from one contour integral,
//   I_m(z) = int_0^inf y^m exp(i(z y + y^3/3)) dy,  m = 0, 1,
// with Ai = Re I_0 / pi, Gi = Im I_0 / pi, Ai' = -Im I_1 / pi and
// Gi' = Re I_1 / pi. The path runs along the real axis up to the stationary
// point y = sqrt(-z) (or not at all for z >= 0) and then leaves along a ray
// at angle pi/6, where the integrand decays like exp(-rho^3/3).
//
// J_n, J'_n, s_{0,n} and s'_{0,n} are evaluated from their finite integral
// representations with composite Gauss-Legendre quadrature.

namespace nicholson {

/// Non-negative integer order. Orders of the Lommel function s_{0,n} must
/// also be even.
struct Order {
  int n = 0;
  bool parity_required = false;

  Order(int order);  // NOLINT(google-explicit-constructor)
  static Order even(int order);
};

/// The combined argument x = c t. Only the product of velocity and time
/// enters the exact functions.
struct Argument {
  double x = 0.0;

  Argument(double value);  // NOLINT(google-explicit-constructor)
};

EvalResult airy_ai(double z);
EvalResult airy_ai_prime(double z);
EvalResult scorer_gi(double z);
EvalResult scorer_gi_prime(double z);

/// Ai and Gi share one quadrature; this returns both.
struct AiryScorerPair {
  EvalResult ai;
  EvalResult gi;
};
AiryScorerPair airy_scorer(double z);
AiryScorerPair airy_scorer_prime(double z);

/// J_n(x) = (1/pi) int_0^pi cos(n theta - x sin theta) d theta.
EvalResult bessel_j(Order n, Argument x);
/// dJ_n/dx = (1/pi) int_0^pi sin(theta) sin(n theta - x sin theta) d theta.
EvalResult bessel_j_prime(Order n, Argument x);

/// s_{0,n}(x) = int_0^{pi/2} cos(n theta) sin(x sin theta) d theta, n even.
EvalResult lommel_s0(Order n, Argument x);
/// d/dx s_{0,n}(x) = int_0^{pi/2} cos(n theta) sin(theta) cos(x sin theta) d theta.
EvalResult lommel_s0_prime(Order n, Argument x);

}  // namespace nicholson
