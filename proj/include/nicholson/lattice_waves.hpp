#pragma once

// Response of a periodic lattice to a point disturbance, node k at time t.
//
// The Laplace-Fourier images
//   u^LF(p, q) = p / (p^2 + 4 c^2 sin^2(q/2)),
//   v^LF(p, q) = sin(q/2) / (p^2 + 4 c^2 sin^2(q/2)),
// invert in closed form to
//   u_k(t) = (2/pi) int_0^{pi/2} cos(2 k z) cos(2 c t sin z) dz = J_{2k}(2ct),
//   v_k(t) = (1/(pi c)) int_0^{pi/2} cos(2 k z) sin(2 c t sin z) dz
//          = s_{0,2k}(2ct) / (pi c).
// Near the quasi-front k = c t both reduce to Airy and Scorer functions.

namespace nicholson {

struct LatticeParams {
  double c = 1.0;  ///< propagation velocity, > 0
  int k = 0;       ///< node index, >= 0
  double t = 0.0;  ///< time, >= 0

  /// Throws DomainError when an invariant is violated.
  void validate() const;
};

double u_exact(const LatticeParams& p);
double v_exact(const LatticeParams& p);

/// Ai(2(k - ct)/(ct)^{1/3}) / (ct)^{1/3}; requires t > 0.
double u_quasifront(const LatticeParams& p);
/// -Gi(2(k - ct)/(ct)^{1/3}) / (2 c (ct)^{1/3}); requires t > 0.
double v_quasifront(const LatticeParams& p);

}  // namespace nicholson
