#include "nicholson/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nicholson/analysis.hpp"
#include "nicholson/asymptotics.hpp"
#include "nicholson/errors.hpp"
#include "nicholson/format.hpp"
#include "nicholson/lattice_waves.hpp"
#include "nicholson/special_core.hpp"

namespace nicholson::cli {

namespace {

using json = nlohmann::json;

struct Options {
  std::string format;  // empty: command default
  int precision = 15;
  double c = 1.0;

  std::string fn;
  double n = 0.0;
  double x = 0.0;
  std::optional<double> a;

  std::string which_table = "delta12";
  std::vector<int> orders;
  double step = 0.1;
  bool interpolated = false;

  int which_figure = 1;
  std::optional<double> t_min, t_max;
  std::optional<double> fixed_t;
  int n_min = 0, n_max = 0;

  std::string quantity = "amplitude";
  std::string family = "bessel";
};

int integer_arg(double v, const char* what) {
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw DomainError(std::string(what) + " must be an integer");
  }
  return static_cast<int>(v);
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string fmt(const Options& o, double v) { return format_number(v, o.precision); }

bool is_json(const Options& o) { return o.format == "json"; }

void write_csv(std::ostream& out, const Options& o, const FigureTable& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << fmt(o, row[i]);
    out << '\n';
  }
}

int cmd_eval(const Options& o, std::ostream& out) {
  const std::string& fn = o.fn;
  std::optional<EvalResult> result;
  double value = 0.0;
  const LatticeParams lattice{o.c, fn.starts_with("u-") || fn.starts_with("v-") ? integer_arg(o.n, "--n (node k)") : 0, o.x};

  if (fn == "ai") result = airy_ai(o.x);
  else if (fn == "aip") result = airy_ai_prime(o.x);
  else if (fn == "gi") result = scorer_gi(o.x);
  else if (fn == "gip") result = scorer_gi_prime(o.x);
  else if (fn == "jn") result = bessel_j(integer_arg(o.n, "--n"), o.x);
  else if (fn == "jnp") result = bessel_j_prime(integer_arg(o.n, "--n"), o.x);
  else if (fn == "s0n") result = lommel_s0(integer_arg(o.n, "--n"), o.x);
  else if (fn == "s0np") result = lommel_s0_prime(integer_arg(o.n, "--n"), o.x);
  else if (fn == "f1") value = f1_bessel(o.n, o.x);
  else if (fn == "f2") value = f2_bessel_prime(o.n, o.x);
  else if (fn == "f3") value = f3_lommel(o.n, o.x);
  else if (fn == "f4") value = f4_lommel_prime(o.n, o.x);
  else if (fn == "olver-j" || fn == "olver-jp") {
    const double a = o.a ? *o.a : OlverCoord::from_argument(o.n, o.x).a;
    value = fn == "olver-j" ? olver_two_term_j(o.n, a) : olver_two_term_jprime(o.n, a);
  }
  else if (fn == "u-exact") value = u_exact(lattice);
  else if (fn == "v-exact") value = v_exact(lattice);
  else if (fn == "u-qf") value = u_quasifront(lattice);
  else if (fn == "v-qf") value = v_quasifront(lattice);
  else throw UsageError("unknown --fn '" + fn + "'");

  if (result) value = result->value;

  if (is_json(o)) {
    json j = {{"fn", fn}, {"n", o.n}, {"x", o.x}, {"value", number_or_null(value)},
              {"abs_err_est", result ? number_or_null(result->abs_err_est) : json(nullptr)}};
    out << j.dump() << '\n';
  } else if (o.format == "csv") {
    out << "fn,n,x,value,abs_err_est\n"
        << fn << ',' << fmt(o, o.n) << ',' << fmt(o, o.x) << ',' << fmt(o, value) << ','
        << (result ? fmt(o, result->abs_err_est) : "") << '\n';
  } else {
    out << fmt(o, value) << '\n';
  }
  return 0;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  struct Part {
    const char* label;
    Family family;
  };
  std::vector<Part> parts;
  std::vector<int> orders = o.orders;
  if (o.which_table == "delta12") {
    parts = {{"delta1", Family::bessel}, {"delta2", Family::bessel_prime}};
    if (orders.empty()) orders = {2, 6, 10, 20};
  } else if (o.which_table == "delta34") {
    parts = {{"delta3", Family::lommel}, {"delta4", Family::lommel_prime}};
    if (orders.empty()) orders = {6, 10, 20, 40};
  } else {
    throw UsageError("--which must be delta12 or delta34");
  }
  const auto mode = o.interpolated ? AmplitudeMode::interpolated : AmplitudeMode::raw_grid;

  bool failed = false;
  json rows = json::array();
  if (!is_json(o)) out << "family,n,max_exact,max_approx,delta_pct,status\n";
  for (const auto& part : parts) {
    for (const auto& row : delta_table(part.family, orders, o.step, mode)) {
      if (!row.ok()) {
        failed = true;
        err << part.label << " n=" << row.n << ": " << row.error << '\n';
      }
      if (is_json(o)) {
        rows.push_back({{"family", part.label}, {"n", row.n}, {"max_exact", number_or_null(row.max_exact)},
                        {"max_approx", number_or_null(row.max_approx)},
                        {"delta_pct", number_or_null(row.delta_pct)},
                        {"status", row.ok() ? "ok" : "error"}});
      } else {
        out << part.label << ',' << row.n << ',' << fmt(o, row.max_exact) << ','
            << fmt(o, row.max_approx) << ',' << fmt(o, row.delta_pct) << ','
            << (row.ok() ? "ok" : "error") << '\n';
      }
    }
  }
  if (is_json(o)) out << json{{"table", o.which_table}, {"step", o.step}, {"rows", rows}}.dump() << '\n';
  return failed ? 1 : 0;
}

int cmd_figure(const Options& o, std::ostream& out) {
  FigureTable table;
  if (o.fixed_t) {
    table = figure_series_fixed_t(o.which_figure, *o.fixed_t, o.n_min, o.n_max);
  } else {
    if (!o.t_min || !o.t_max) throw UsageError("figure needs --t-min and --t-max (or --fixed-t)");
    table = figure_series(o.which_figure, o.n, GridSpec{*o.t_min, *o.t_max, o.step});
  }
  if (is_json(o)) {
    json cols = json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      json col = json::array();
      for (const auto& row : table.rows) col.push_back(number_or_null(row[c]));
      cols[table.columns[c]] = col;
    }
    out << json{{"figure", o.which_figure}, {"n", o.n}, {"columns", cols}}.dump() << '\n';
  } else {
    write_csv(out, o, table);
  }
  return 0;
}

int cmd_scaling(const Options& o, std::ostream& out) {
  Quantity quantity;
  if (o.quantity == "amplitude") quantity = Quantity::amplitude;
  else if (o.quantity == "width") quantity = Quantity::width;
  else throw UsageError("--quantity must be amplitude or width");
  const Family family = family_from_string(o.family);
  std::vector<int> orders = o.orders;
  if (orders.empty()) orders = {10, 100, 1000, 10000};

  const auto fit = scaling_fit(quantity, family, orders);
  if (is_json(o)) {
    json pts = json::array();
    for (const auto& p : fit.points) {
      pts.push_back({{"n", p.n}, {"measured", p.measured}, {"t_at", p.t_at}});
    }
    out << json{{"quantity", o.quantity}, {"family", o.family},
                {"abscissa", fit.abscissa == Abscissa::location ? "t_at" : "n"},
                {"exponent", fit.exponent}, {"intercept", fit.intercept},
                {"max_residual", fit.max_residual}, {"exponent_vs_n", fit.exponent_vs_order},
                {"points", pts}}
               .dump()
        << '\n';
  } else {
    out << "n,measured,fit_exponent,t_at\n";
    for (const auto& p : fit.points) {
      out << fmt(o, p.n) << ',' << fmt(o, p.measured) << ',' << fmt(o, fit.exponent) << ','
          << fmt(o, p.t_at) << '\n';
    }
    out << "# exponent=" << fmt(o, fit.exponent)
        << " abscissa=" << (fit.abscissa == Abscissa::location ? "t_at" : "n")
        << " intercept=" << fmt(o, fit.intercept) << " max_residual=" << fmt(o, fit.max_residual)
        << " exponent_vs_n=" << fmt(o, fit.exponent_vs_order) << '\n';
  }
  return 0;
}

int cmd_bigorder(const Options& o, std::ostream& out) {
  const auto r = bigorder_check();
  if (is_json(o)) {
    out << json{{"nu", r.nu}, {"x", r.x}, {"f1_value", r.f1_value},
                {"published_f1_value", r.published_f1_value}, {"reference_exact", r.reference_exact},
                {"agreeing_sig_figs", r.agreeing_sig_figs},
                {"sig_figs_vs_published_f1", r.sig_figs_vs_published_f1}}
               .dump()
        << '\n';
  } else if (o.format == "csv") {
    out << "nu,x,f1_value,published_f1_value,reference_exact,agreeing_sig_figs,sig_figs_vs_published_f1\n"
        << fmt(o, r.nu) << ',' << fmt(o, r.x) << ',' << fmt(o, r.f1_value) << ','
        << fmt(o, r.published_f1_value) << ',' << fmt(o, r.reference_exact) << ','
        << r.agreeing_sig_figs << ',' << r.sig_figs_vs_published_f1 << '\n';
  } else {
    out << "nu: " << fmt(o, r.nu) << '\n'
        << "x: " << fmt(o, r.x) << '\n'
        << "f1_value: " << fmt(o, r.f1_value) << '\n'
        << "published_f1_value: " << fmt(o, r.published_f1_value) << '\n'
        << "reference_exact: " << fmt(o, r.reference_exact) << '\n'
        << "agreeing_sig_figs: " << r.agreeing_sig_figs << '\n'
        << "sig_figs_vs_published_f1: " << r.sig_figs_vs_published_f1 << '\n';
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bessel, Lommel, Airy and Scorer functions and their transition-region approximants"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--precision", o.precision, "Significant digits in numeric output")
      ->check(CLI::Range(1, 17));
  app.add_option("--c", o.c, "Propagation velocity for lattice evaluations");

  auto* eval = app.add_subcommand("eval", "Evaluate one function");
  eval->add_option("--fn", o.fn,
                   "ai aip gi gip jn jnp s0n s0np f1 f2 f3 f4 olver-j olver-jp u-exact v-exact u-qf v-qf")
      ->required();
  eval->add_option("--n", o.n, "Order (node index k for lattice functions)");
  eval->add_option("--x", o.x, "Argument (z for Airy/Scorer, t for lattice functions)");
  eval->add_option("--a", o.a, "Offset coefficient for olver-j/olver-jp, overrides --x");

  auto* table = app.add_subcommand("table", "Peak-amplitude relative errors");
  table->add_option("--which", o.which_table, "delta12 or delta34");
  table->add_option("--orders", o.orders, "Comma-separated orders")->delimiter(',');
  table->add_option("--step", o.step, "Grid step in t");
  table->add_flag("--interpolated", o.interpolated, "Use interpolated peak amplitudes");

  auto* figure = app.add_subcommand("figure", "Exact and approximate series on a grid");
  figure->add_option("--which", o.which_figure, "Figure id 1..5")->required();
  figure->add_option("--n", o.n, "Order");
  figure->add_option("--t-min", o.t_min);
  figure->add_option("--t-max", o.t_max);
  figure->add_option("--step", o.step, "Grid step in t");
  figure->add_option("--fixed-t", o.fixed_t, "Sweep n at this t instead of sweeping t");
  figure->add_option("--n-min", o.n_min);
  figure->add_option("--n-max", o.n_max);

  auto* scaling = app.add_subcommand("scaling", "Log-log fit of amplitude or width against n");
  scaling->add_option("--quantity", o.quantity, "amplitude or width");
  scaling->add_option("--family", o.family, "bessel bessel_prime lommel lommel_prime");
  scaling->add_option("--orders", o.orders, "Comma-separated orders")->delimiter(',');

  auto* bigorder = app.add_subcommand("bigorder", "F1 at nu = 5000000.2 against the published value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (table->parsed()) return cmd_table(o, out, err);
    if (figure->parsed()) return cmd_figure(o, out);
    if (scaling->parsed()) return cmd_scaling(o, out);
    if (bigorder->parsed()) return cmd_bigorder(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace nicholson::cli
