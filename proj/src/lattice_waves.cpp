#include "nicholson/lattice_waves.hpp"

#include <cmath>
#include <numbers>

#include "nicholson/errors.hpp"
#include "nicholson/special_core.hpp"

namespace nicholson {

void LatticeParams::validate() const {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("lattice: c must be positive");
  if (k < 0) throw DomainError("lattice: k must be non-negative");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("lattice: t must be non-negative");
}

double u_exact(const LatticeParams& p) {
  p.validate();
  return bessel_j(2 * p.k, 2.0 * p.c * p.t).value;
}

double v_exact(const LatticeParams& p) {
  p.validate();
  return lommel_s0(2 * p.k, 2.0 * p.c * p.t).value / (std::numbers::pi * p.c);
}

double u_quasifront(const LatticeParams& p) {
  p.validate();
  if (!(p.t > 0.0)) throw DomainError("u_quasifront: t must be positive");
  const double ct = p.c * p.t;
  const double s = std::cbrt(ct);
  return airy_ai(2.0 * (p.k - ct) / s).value / s;
}

double v_quasifront(const LatticeParams& p) {
  p.validate();
  if (!(p.t > 0.0)) throw DomainError("v_quasifront: t must be positive");
  const double ct = p.c * p.t;
  const double s = std::cbrt(ct);
  return -scorer_gi(2.0 * (p.k - ct) / s).value / (2.0 * p.c * s);
}

}  // namespace nicholson
