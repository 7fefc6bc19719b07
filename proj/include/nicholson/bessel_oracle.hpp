#pragma once

// Independent evaluation of J_n(x) for cross-checking the quadrature path.
// Not used by the production evaluators.

namespace nicholson::oracle {

/// Ascending power series. Accurate while exp(x) * eps is acceptable,
/// i.e. for small x or for n much larger than x.
double bessel_j_ascending(int n, double x);

/// Miller's backward recurrence normalised with J_0 + 2 sum J_{2k} = 1.
double bessel_j_miller(int n, double x);

/// Ascending series for x < 8, backward recurrence otherwise.
double bessel_j_series(int n, double x);

/// (J_{n-1} - J_{n+1}) / 2, with J'_0 = -J_1.
double bessel_j_prime_series(int n, double x);

}  // namespace nicholson::oracle
