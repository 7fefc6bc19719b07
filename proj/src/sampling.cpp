#include "nicholson/sampling.hpp"

#include <cmath>
#include <cstddef>
#include <exception>
#include <string>

#include "nicholson/asymptotics.hpp"
#include "nicholson/errors.hpp"
#include "nicholson/special_core.hpp"

namespace nicholson {

namespace {

int integer_order(double n) {
  if (!(n >= 0.0) || n != std::floor(n) || n > 1e9) {
    throw DomainError("exact functions need a non-negative integer order, got " + std::to_string(n));
  }
  return static_cast<int>(n);
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::bessel: return "bessel";
    case Family::bessel_prime: return "bessel_prime";
    case Family::lommel: return "lommel";
    case Family::lommel_prime: return "lommel_prime";
  }
  return "?";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::bessel, Family::bessel_prime, Family::lommel, Family::lommel_prime}) {
    if (to_string(f) == name) return f;
  }
  throw UsageError("unknown family '" + std::string(name) +
                   "' (expected bessel, bessel_prime, lommel or lommel_prime)");
}

double evaluate(Family family, Curve curve, double n, double t) {
  if (curve == Curve::approx) {
    switch (family) {
      case Family::bessel: return f1_bessel(n, t);
      case Family::bessel_prime: return f2_bessel_prime(n, t);
      case Family::lommel: return f3_lommel(n, t);
      case Family::lommel_prime: return f4_lommel_prime(n, t);
    }
  }
  const int order = integer_order(n);
  switch (family) {
    case Family::bessel: return bessel_j(order, t).value;
    case Family::bessel_prime: return bessel_j_prime(order, t).value;
    case Family::lommel: return lommel_s0(order, t).value;
    case Family::lommel_prime: return lommel_s0_prime(order, t).value;
  }
  return std::nan("");
}

ScalarFn curve_fn(Family family, Curve curve, double n) {
  return [family, curve, n](double t) { return evaluate(family, curve, n, t); };
}

std::vector<double> sample_serial(const ScalarFn& f, std::span<const double> ts) {
  std::vector<double> out(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) out[i] = f(ts[i]);
  return out;
}

std::vector<double> sample_parallel(const ScalarFn& f, std::span<const double> ts) {
  const auto count = static_cast<std::ptrdiff_t>(ts.size());
  std::vector<double> out(ts.size());
  std::ptrdiff_t first_bad = count;
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i] = f(ts[i]);
    } catch (...) {
#pragma omp critical(nicholson_sample_error)
      {
        if (i < first_bad) {
          first_bad = i;
          error = std::current_exception();
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<double> sample(const ScalarFn& f, std::span<const double> ts, Exec exec) {
  return exec == Exec::parallel ? sample_parallel(f, ts) : sample_serial(f, ts);
}

}  // namespace nicholson
