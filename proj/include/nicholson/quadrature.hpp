#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "nicholson/errors.hpp"

namespace nicholson::quad {

inline constexpr int kGaussPoints = 16;

/// Nodes and weights of the 16-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::array<double, kGaussPoints> nodes{};
  std::array<double, kGaussPoints> weights{};
};

const GaussLegendreRule& gauss_legendre16();

template <class T>
struct Estimate {
  T value{};
  double abs_err = 0.0;
  int panels = 0;
};

namespace detail {
inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }
}  // namespace detail

/// Composite Gauss-Legendre sum over `panels` equal panels of [a, b].
/// `abs_sum` receives the same sum taken over |f|, used as a rounding scale.
template <class F>
auto composite(F&& f, double a, double b, int panels, double* abs_sum = nullptr)
    -> decltype(f(a)) {
  using T = decltype(f(a));
  const auto& rule = gauss_legendre16();
  const double width = (b - a) / panels;
  const double half = 0.5 * width;
  T total{};
  double mag = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    T panel{};
    for (int i = 0; i < kGaussPoints; ++i) {
      const T v = f(mid + half * rule.nodes[i]);
      panel += rule.weights[i] * v;
      mag += rule.weights[i] * detail::magnitude(v);
    }
    total += half * panel;
  }
  if (abs_sum) *abs_sum = half * mag;
  return total;
}

/// Doubles the panel count starting from `initial_panels` until two
/// successive estimates differ by at most max(tol, rounding floor).
/// Returns the finer estimate; the difference is the error estimate.
template <class F>
auto doubling(F&& f, double a, double b, int initial_panels, double tol,
              int max_panels = 1 << 22) -> Estimate<decltype(f(a))> {
  using T = decltype(f(a));
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  int panels = initial_panels < 1 ? 1 : initial_panels;
  double scale = 0.0;
  T coarse = composite(f, a, b, panels, &scale);
  for (;;) {
    const int finer = 2 * panels;
    T fine = composite(f, a, b, finer, &scale);
    const double diff = detail::magnitude(fine - coarse);
    const double floor = 64.0 * kEps * scale;
    if (diff <= tol || diff <= floor) {
      return {fine, diff + kEps * scale, finer};
    }
    if (finer >= max_panels) {
      throw ConvergenceError(
          "composite Gauss-Legendre did not converge with " + std::to_string(finer) + " panels",
          EvalResult{detail::magnitude(fine), diff});
    }
    panels = finer;
    coarse = fine;
  }
}

}  // namespace nicholson::quad
