#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

// Grid-evaluation kernels. `sample` has a serial reference path and an
// OpenMP path; both evaluate each point independently, so their outputs are
// bit-identical.

namespace nicholson {

enum class Exec { serial, parallel };

enum class Family { bessel, bessel_prime, lommel, lommel_prime };

/// Exact function or its Nicholson-type approximant.
enum class Curve { exact, approx };

std::string_view to_string(Family family);
Family family_from_string(std::string_view name);

using ScalarFn = std::function<double(double)>;

/// Member of `family` at order n and argument t, with c = 1. Exact curves
/// require integer n (even for the Lommel families).
double evaluate(Family family, Curve curve, double n, double t);

/// The same as a callable of t.
ScalarFn curve_fn(Family family, Curve curve, double n);

std::vector<double> sample_serial(const ScalarFn& f, std::span<const double> ts);
std::vector<double> sample_parallel(const ScalarFn& f, std::span<const double> ts);

/// Evaluates f at every point. On failure rethrows the exception raised at
/// the lowest failing index, whichever path ran.
std::vector<double> sample(const ScalarFn& f, std::span<const double> ts,
                           Exec exec = Exec::parallel);

}  // namespace nicholson
