#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nicholson/sampling.hpp"

// Reproduction of the accuracy study: principal extrema, peak-amplitude
// errors, figure data, scaling exponents and the large-order comparison.
// The velocity is fixed to c = 1 throughout, so t and x coincide.

namespace nicholson {

/// Uniform grid t_min, t_min + step, ... up to t_max.
/// size() = floor((t_max - t_min)/step) + 1; t_min == t_max gives one point.
struct GridSpec {
  double t_min = 0.0;
  double t_max = 0.0;
  double step = 0.1;

  /// Throws UsageError on a non-positive step or t_min > t_max.
  void validate() const;
  std::size_t size() const;
  double at(std::size_t i) const;
  std::vector<double> points() const;
};

enum class ExtremumKind { maximum, minimum };

struct ExtremumRecord {
  double t_at = 0.0;  ///< refined by a quadratic through the bracketing samples
  double value = 0.0;
  ExtremumKind kind = ExtremumKind::maximum;
};

/// raw_grid reports the sampled value at the discrete extremum;
/// interpolated reports the vertex of the quadratic.
enum class AmplitudeMode { raw_grid, interpolated };

/// Range of the transition coordinate z = (n - t)/(t/2)^{1/3} searched for
/// the principal extremum. It holds the principal lobe of each family
/// (z ~ -1.0 for J, -2.3 for J', -2.2 for s, -3.2 for s') but not the
/// z ~ -4.1 lobe of Ai', whose envelope grows with |z|.
struct PrincipalWindow {
  double z_min = -3.75;
  double z_max = 4.0;
};

/// Grid aligned to integer multiples of `step` covering the window at order n.
GridSpec principal_grid(double n, double step = 0.1, PrincipalWindow window = {});

/// Local extremum of largest modulus among the samples. Interior points only.
/// Throws NoExtremumError when the discrete derivative never changes sign.
ExtremumRecord find_principal_extremum(std::span<const double> t, std::span<const double> values,
                                       AmplitudeMode mode = AmplitudeMode::raw_grid);

/// Samples f on the grid points that fall inside the principal window of
/// order n and returns the principal extremum.
ExtremumRecord find_principal_extremum(const ScalarFn& f, double n, const GridSpec& grid,
                                       AmplitudeMode mode = AmplitudeMode::raw_grid,
                                       Exec exec = Exec::parallel,
                                       PrincipalWindow window = {});

struct DeltaRow {
  int n = 0;
  double max_exact = 0.0;
  double max_approx = 0.0;
  double delta_pct = 0.0;  ///< (1 - max_approx/max_exact) * 100
  std::string error;       ///< empty when the row was computed

  bool ok() const { return error.empty(); }
};

/// One row per order, sorted by n. A failing order yields a row with
/// `error` set and NaN amplitudes; the other rows are still computed.
std::vector<DeltaRow> delta_table(Family family, std::vector<int> orders, double grid_step = 0.1,
                                  AmplitudeMode mode = AmplitudeMode::raw_grid,
                                  Exec exec = Exec::parallel);

struct FigureTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Figures 1-4: columns t, exact, approx for J_n/F1, J'_n/F2, s_{0,n}/F3,
/// s'_{0,n}/F4. Figure 5: columns t, approx for F1 at any real n > 0.
FigureTable figure_series(int which, double n, const GridSpec& grid, Exec exec = Exec::parallel);

/// Figures 1-4 with the axes swapped: t fixed, n running over integers
/// n_min..n_max (even integers for figures 3 and 4).
FigureTable figure_series_fixed_t(int which, double t, int n_min, int n_max,
                                  Exec exec = Exec::parallel);

enum class Quantity { amplitude, width };

struct ScalingPoint {
  double n = 0.0;
  double t_at = 0.0;  ///< location of the principal extremum
  double measured = 0.0;
};

/// Independent variable of a log-log fit: the order n, or the location t_at
/// of the extremum where the quantity was measured.
enum class Abscissa { order, location };

struct ScalingFit {
  Abscissa abscissa = Abscissa::order;
  double exponent = 0.0;   ///< slope of log10(measured) against log10(abscissa)
  double intercept = 0.0;
  double max_residual = 0.0;  ///< in log10 units
  double exponent_vs_order = 0.0;  ///< slope against log10(n), for reference
  std::vector<ScalingPoint> points;
};

/// Least squares in log-log coordinates. Needs at least four points with
/// positive abscissa and measured values.
ScalingFit fit_power_law(std::vector<ScalingPoint> points, Abscissa abscissa = Abscissa::order);

/// amplitude: |value| of the principal extremum of the exact function;
/// width: distance from t = n to that extremum.
ScalingPoint measure_scaling_point(Quantity quantity, Family family, int n,
                                   Exec exec = Exec::parallel);

/// Amplitudes are fitted against the extremum location t_at (the decay law
/// is in t; at n = 10 the J' lobe already sits at t = 1.4 n), widths against n.
ScalingFit scaling_fit(Quantity quantity, Family family, std::vector<int> orders,
                       Exec exec = Exec::parallel);

struct BigOrderReport {
  double nu = 0.0;
  double x = 0.0;
  double f1_value = 0.0;
  double published_f1_value = 0.0;
  double reference_exact = 0.0;
  int agreeing_sig_figs = 0;          ///< f1_value against reference_exact
  int sig_figs_vs_published_f1 = 0;   ///< f1_value against published_f1_value
};

/// F1 at nu = 5000000.2, x = 5000000.1 against the published high-precision
/// value of J_nu(x).
BigOrderReport bigorder_check();

/// floor(-log10(|value - reference| / |reference|)), capped at 17.
int agreeing_sig_figs(double value, double reference);

}  // namespace nicholson
