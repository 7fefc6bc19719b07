#include "nicholson/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nicholson/asymptotics.hpp"
#include "nicholson/errors.hpp"

namespace nicholson {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double transition_z(double n, double t) { return (n - t) / std::cbrt(t / 2.0); }

// Solves transition_z(n, t) = target for t > 0; z decreases monotonically in t.
double solve_for_t(double n, double target) {
  double lo = 1e-12;
  if (transition_z(n, lo) <= target) return lo;
  double hi = std::max(1.0, 2.0 * std::abs(n));
  while (transition_z(n, hi) > target) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-13 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (transition_z(n, mid) > target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Family family_for_figure(int which) {
  switch (which) {
    case 1: return Family::bessel;
    case 2: return Family::bessel_prime;
    case 3: return Family::lommel;
    case 4: return Family::lommel_prime;
    case 5: return Family::bessel;
    default:
      throw UsageError("figure id must be 1..5, got " + std::to_string(which));
  }
}

bool is_lommel(Family f) { return f == Family::lommel || f == Family::lommel_prime; }

}  // namespace

void GridSpec::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) throw UsageError("grid step must be positive");
  if (!std::isfinite(t_min) || !std::isfinite(t_max)) throw UsageError("grid bounds must be finite");
  if (t_min > t_max) throw UsageError("empty grid: t_min > t_max");
}

std::size_t GridSpec::size() const {
  validate();
  // Tolerate bounds that are a rounding error short of a whole step.
  return static_cast<std::size_t>(std::floor((t_max - t_min) / step + 1e-9)) + 1;
}

double GridSpec::at(std::size_t i) const { return t_min + static_cast<double>(i) * step; }

std::vector<double> GridSpec::points() const {
  std::vector<double> ts(size());
  for (std::size_t i = 0; i < ts.size(); ++i) ts[i] = at(i);
  return ts;
}

GridSpec principal_grid(double n, double step, PrincipalWindow window) {
  if (!(step > 0.0)) throw UsageError("grid step must be positive");
  const double t_lo = solve_for_t(n, window.z_max);
  const double t_hi = solve_for_t(n, window.z_min);
  const double k_lo = std::max(1.0, std::ceil(t_lo / step - 1e-9));
  const double k_hi = std::floor(t_hi / step + 1e-9);
  if (k_hi < k_lo) throw UsageError("principal window holds no grid points");
  return {k_lo * step, k_hi * step, step};
}

ExtremumRecord find_principal_extremum(std::span<const double> t, std::span<const double> values,
                                       AmplitudeMode mode) {
  if (t.size() != values.size()) throw UsageError("sample and grid sizes differ");
  std::size_t best = 0;
  double best_abs = -1.0;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    const double a = values[i - 1], b = values[i], c = values[i + 1];
    const bool peak = (b > a && b >= c) || (b < a && b <= c);
    if (peak && std::abs(b) > best_abs) {
      best = i;
      best_abs = std::abs(b);
    }
  }
  if (best_abs < 0.0) throw NoExtremumError("no local extremum in the sampled window");

  const double a = values[best - 1], b = values[best], c = values[best + 1];
  const double h = 0.5 * (t[best + 1] - t[best - 1]);
  const double curvature = a - 2.0 * b + c;
  // Vertex offset in steps, within [-1/2, 1/2] for a genuine extremum.
  const double d = curvature != 0.0 ? 0.5 * (a - c) / curvature : 0.0;

  ExtremumRecord rec;
  rec.t_at = t[best] + d * h;
  rec.value = mode == AmplitudeMode::interpolated ? b - 0.25 * (a - c) * d : b;
  rec.kind = b > a ? ExtremumKind::maximum : ExtremumKind::minimum;
  return rec;
}

ExtremumRecord find_principal_extremum(const ScalarFn& f, double n, const GridSpec& grid,
                                       AmplitudeMode mode, Exec exec, PrincipalWindow window) {
  const double t_lo = solve_for_t(n, window.z_max);
  const double t_hi = solve_for_t(n, window.z_min);
  std::vector<double> ts;
  for (double t : grid.points()) {
    if (t > 0.0 && t >= t_lo && t <= t_hi) ts.push_back(t);
  }
  if (ts.size() < 3) throw NoExtremumError("grid does not cover the principal window");
  const auto values = sample(f, ts, exec);
  return find_principal_extremum(ts, values, mode);
}

std::vector<DeltaRow> delta_table(Family family, std::vector<int> orders, double grid_step,
                                  AmplitudeMode mode, Exec exec) {
  std::sort(orders.begin(), orders.end());
  std::vector<DeltaRow> rows;
  rows.reserve(orders.size());
  for (int n : orders) {
    DeltaRow row;
    row.n = n;
    try {
      if (n < 1) throw DomainError("order must be positive, got " + std::to_string(n));
      if (is_lommel(family) && n % 2 != 0) {
        throw ParityError("s_{0,n} is defined for even n only, got n = " + std::to_string(n));
      }
      const GridSpec grid = principal_grid(n, grid_step);
      const auto exact = find_principal_extremum(curve_fn(family, Curve::exact, n), n, grid, mode, exec);
      const auto approx = find_principal_extremum(curve_fn(family, Curve::approx, n), n, grid, mode, exec);
      row.max_exact = std::abs(exact.value);
      row.max_approx = std::abs(approx.value);
      row.delta_pct = (1.0 - row.max_approx / row.max_exact) * 100.0;
    } catch (const Error& e) {
      row.max_exact = row.max_approx = row.delta_pct = kNaN;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

FigureTable figure_series(int which, double n, const GridSpec& grid, Exec exec) {
  const Family family = family_for_figure(which);
  const auto ts = grid.points();
  FigureTable table;
  const auto approx = sample(curve_fn(family, Curve::approx, n), ts, exec);
  if (which == 5) {
    table.columns = {"t", "approx"};
    for (std::size_t i = 0; i < ts.size(); ++i) table.rows.push_back({ts[i], approx[i]});
    return table;
  }
  const auto exact = sample(curve_fn(family, Curve::exact, n), ts, exec);
  table.columns = {"t", "exact", "approx"};
  for (std::size_t i = 0; i < ts.size(); ++i) table.rows.push_back({ts[i], exact[i], approx[i]});
  return table;
}

FigureTable figure_series_fixed_t(int which, double t, int n_min, int n_max, Exec exec) {
  if (which == 5) throw UsageError("figure 5 has no fixed-t form");
  const Family family = family_for_figure(which);
  if (n_min < 0 || n_min > n_max) throw UsageError("order range is empty");
  const int stride = is_lommel(family) ? 2 : 1;
  if (is_lommel(family) && n_min % 2 != 0) ++n_min;
  std::vector<double> ns;
  for (int n = n_min; n <= n_max; n += stride) ns.push_back(n);
  if (ns.empty()) throw UsageError("order range is empty");

  auto exact = sample([family, t](double n) { return evaluate(family, Curve::exact, n, t); }, ns, exec);
  auto approx = sample([family, t](double n) { return evaluate(family, Curve::approx, n, t); }, ns, exec);
  FigureTable table;
  table.columns = {"n", "exact", "approx"};
  for (std::size_t i = 0; i < ns.size(); ++i) table.rows.push_back({ns[i], exact[i], approx[i]});
  return table;
}

namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

LineFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double m = static_cast<double>(xs.size());
  const double denom = m * sxx - sx * sx;
  if (!(std::abs(denom) > 1e-300)) throw FitError("power-law fit needs at least two distinct abscissae");
  LineFit fit;
  fit.slope = (m * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / m;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    fit.max_residual = std::max(fit.max_residual, std::abs(ys[i] - fit.intercept - fit.slope * xs[i]));
  }
  return fit;
}

}  // namespace

ScalingFit fit_power_law(std::vector<ScalingPoint> points, Abscissa abscissa) {
  if (points.size() < 4) {
    throw FitError("power-law fit needs at least 4 points, got " + std::to_string(points.size()));
  }
  std::vector<double> log_n, log_t, log_y;
  for (const auto& p : points) {
    const double t = abscissa == Abscissa::location ? p.t_at : p.n;
    if (!(p.n > 0.0) || !(t > 0.0) || !(p.measured > 0.0)) {
      throw FitError("power-law fit needs positive abscissae and measured values");
    }
    log_n.push_back(std::log10(p.n));
    log_t.push_back(std::log10(t));
    log_y.push_back(std::log10(p.measured));
  }
  const LineFit main = least_squares(log_t, log_y);
  ScalingFit fit;
  fit.abscissa = abscissa;
  fit.exponent = main.slope;
  fit.intercept = main.intercept;
  fit.max_residual = main.max_residual;
  fit.exponent_vs_order = least_squares(log_n, log_y).slope;
  fit.points = std::move(points);
  return fit;
}

ScalingPoint measure_scaling_point(Quantity quantity, Family family, int n, Exec exec) {
  const GridSpec grid = principal_grid(n, 0.1);
  const auto rec = find_principal_extremum(curve_fn(family, Curve::exact, n), n, grid,
                                           AmplitudeMode::interpolated, exec);
  const double measured = quantity == Quantity::amplitude ? std::abs(rec.value) : rec.t_at - n;
  return {static_cast<double>(n), rec.t_at, measured};
}

ScalingFit scaling_fit(Quantity quantity, Family family, std::vector<int> orders, Exec exec) {
  if (orders.size() < 4) {
    throw FitError("scaling fit needs at least 4 orders, got " + std::to_string(orders.size()));
  }
  std::sort(orders.begin(), orders.end());
  std::vector<ScalingPoint> points;
  for (int n : orders) points.push_back(measure_scaling_point(quantity, family, n, exec));
  return fit_power_law(std::move(points),
                       quantity == Quantity::amplitude ? Abscissa::location : Abscissa::order);
}

int agreeing_sig_figs(double value, double reference) {
  const double rel = std::abs(value - reference) / std::abs(reference);
  if (rel == 0.0) return 17;
  return std::clamp(static_cast<int>(std::floor(-std::log10(rel))), 0, 17);
}

BigOrderReport bigorder_check() {
  BigOrderReport r;
  r.nu = 5000000.2;
  r.x = 5000000.1;
  r.published_f1_value = 0.002614463961695188;
  r.reference_exact = 0.002614463954691926;
  r.f1_value = f1_bessel(r.nu, r.x);
  r.agreeing_sig_figs = agreeing_sig_figs(r.f1_value, r.reference_exact);
  r.sig_figs_vs_published_f1 = agreeing_sig_figs(r.f1_value, r.published_f1_value);
  return r;
}

}  // namespace nicholson
