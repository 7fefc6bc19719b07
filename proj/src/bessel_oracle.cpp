#include "nicholson/bessel_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nicholson::oracle {

double bessel_j_ascending(int n, double x) {
  if (n < 0 || x < 0.0) throw std::domain_error("bessel_j_ascending: n, x must be >= 0");
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  const double half = 0.5 * x;
  // First term (x/2)^n / n! in log space so large n does not overflow.
  double term = std::exp(n * std::log(half) - std::lgamma(n + 1.0));
  double sum = term;
  const double q = -half * half;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * (n + k));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double bessel_j_miller(int n, double x) {
  if (n < 0 || x < 0.0) throw std::domain_error("bessel_j_miller: n, x must be >= 0");
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;

  // Start well past the turning point so J_start(x) is negligible.
  int start = static_cast<int>(std::max<double>(n, x) + 25.0 * std::cbrt(x) + 40.0);
  if (start % 2 != 0) ++start;

  double next = 0.0;  // J_{k+1}
  double cur = 1.0;  // J_k, arbitrary scale
  double norm = 0.0;
  double target = 0.0;
  if (start == n) target = cur;
  for (int k = start; k > 0; --k) {
    const double prev = (2.0 * k / x) * cur - next;  // J_{k-1}
    next = cur;
    cur = prev;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * cur;
    if (k - 1 == n) target = cur;
    if (std::abs(cur) > 1e250) {
      next *= 1e-250;
      cur *= 1e-250;
      norm *= 1e-250;
      target *= 1e-250;
    }
  }
  norm += cur;  // J_0
  return target / norm;
}

double bessel_j_series(int n, double x) {
  return x < 8.0 ? bessel_j_ascending(n, x) : bessel_j_miller(n, x);
}

double bessel_j_prime_series(int n, double x) {
  if (n == 0) return -bessel_j_series(1, x);
  return 0.5 * (bessel_j_series(n - 1, x) - bessel_j_series(n + 1, x));
}

}  // namespace nicholson::oracle
