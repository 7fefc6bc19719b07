#pragma once

// Nicholson-type approximants of Bessel and Lommel functions near the
// transition point x = n, and the leading terms of the large-order expansion
// J_nu(nu + a nu^{1/3}).
//
// All functions accept non-integer n. They depend on c and t only through
// x = c t.

namespace nicholson {

/// Stretched coordinate z = (n - x) / (x/2)^{1/3} and its scale (x/2)^{1/3}.
struct TransitionCoord {
  double z = 0.0;
  double scale = 1.0;
};

TransitionCoord z_coord(double n, double x);

/// Parameterisation x = nu + a nu^{1/3}.
struct OlverCoord {
  double nu = 1.0;
  double a = 0.0;

  static OlverCoord from_argument(double nu, double x);
  double argument() const;
};

/// F1 = Ai(z) / scale, approximates J_n(x).
double f1_bessel(double n, double x);
/// F2 = -Ai'(z) / scale^2, approximates J'_n(x).
double f2_bessel_prime(double n, double x);
/// F3 = -(pi/2) Gi(z) / scale, approximates s_{0,n}(x).
double f3_lommel(double n, double x);
/// F4 = (pi/2) Gi'(z) / scale^2, approximates s'_{0,n}(x).
/// Not the exact x-derivative of F3: the O(1/x) term of dz/dx is dropped.
double f4_lommel_prime(double n, double x);

/// 2^{1/3} nu^{-1/3} Ai(-2^{1/3} a) + 2^{2/3} nu^{-1} Ai'(-2^{1/3} a) (3/10) a^2.
double olver_two_term_j(double nu, double a);
/// -2^{2/3} nu^{-2/3} Ai'(-2^{1/3} a) + 2^{1/3} nu^{-4/3} Ai(-2^{1/3} a) ((3/5) a^3 - 1/5).
double olver_two_term_jprime(double nu, double a);

}  // namespace nicholson
