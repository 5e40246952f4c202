#include "cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bellsta/emit.hpp"
#include "bellsta/errors.hpp"
#include "bellsta/experiments.hpp"
#include "bellsta/hamiltonian.hpp"
#include "bellsta/lri.hpp"
#include "bellsta/version.hpp"

namespace bellsta::cli {
namespace {

struct Options {
  std::string method;
  std::string params = "default";
  std::vector<std::string> sets;
  std::string out;
  std::string format = "csv";
  std::string window = "follow-crossing";
  int steps = 0;
  bool dump_config = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read parameter file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

double parse_double(const std::string& key, const std::string& text) {
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size())
    throw DomainError("--set " + key + ": \"" + text + "\" is not a number");
  return value;
}

void apply_set(RunConfig& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw DomainError("--set expects key=value, got \"" + assignment + "\"");
  const std::string key = assignment.substr(0, eq);
  const std::string value = assignment.substr(eq + 1);
  SystemParams& p = config.params;
  if (key == "xi") p.xi = parse_double(key, value);
  else if (key == "omega") p.omega = parse_double(key, value);
  else if (key == "alpha") p.alpha = parse_double(key, value);
  else if (key == "omega0") p.omega0 = parse_double(key, value);
  else if (key == "t_width") p.t_width = parse_double(key, value);
  else if (key == "t_i") p.t_i = parse_double(key, value);
  else if (key == "t_f") p.t_f = parse_double(key, value);
  else if (key == "kappa0") p.kappa0 = parse_double(key, value);
  else if (key == "n_steps") {
    char* end = nullptr;
    const long n = std::strtol(value.c_str(), &end, 10);
    if (value.empty() || end != value.c_str() + value.size() || n < 2)
      throw DomainError("--set n_steps: \"" + value + "\" is not an integer >= 2");
    config.n_steps = static_cast<int>(n);
  } else {
    throw DomainError("unknown config key \"" + key + "\"");
  }
}

/// "default" resolves to the method's default scenario (or the plain defaults
/// when no method applies); anything else is a JSON parameter file. --set
/// overrides come after the file, --steps last.
RunConfig resolve_config(const Options& o, std::optional<Method> method) {
  RunConfig config;
  if (o.params == "default") {
    if (method) {
      const Scenario defaults = Scenario::with_defaults(*method);
      config.params = defaults.params;
      config.n_steps = defaults.n_steps;
    }
  } else {
    config = config_from_json(read_file(o.params));
  }
  for (const auto& assignment : o.sets) apply_set(config, assignment);
  if (o.steps > 0) {
    if (o.steps < 2) throw DomainError("--steps must be >= 2");
    config.n_steps = o.steps;
  }
  config.params.validate();
  return config;
}

WindowPolicy parse_window(const std::string& text) {
  if (text == "follow-crossing") return WindowPolicy::follow_crossing();
  const std::string prefix = "fixed:";
  if (text.rfind(prefix, 0) == 0) {
    const double t_total = parse_double("window", text.substr(prefix.size()));
    if (!(t_total > 0.0)) throw DomainError("--window fixed: length must be > 0");
    return WindowPolicy::fixed(t_total);
  }
  throw DomainError("--window must be follow-crossing or fixed:<t_total>, got \"" +
                    text + "\"");
}

Metadata base_metadata(const std::string& command, const RunConfig& config,
                       std::optional<Method> method) {
  Metadata meta;
  meta.add("version", build_version());
  meta.add("command", command);
  if (method) meta.add("method", method_to_string(*method));
  meta.add("xi", config.params.xi);
  meta.add("omega", config.params.omega);
  meta.add("alpha", config.params.alpha);
  meta.add("omega0", config.params.omega0);
  meta.add("t_width", config.params.t_width);
  meta.add("t_i", config.params.t_i);
  meta.add("t_f", config.params.t_f);
  meta.add("kappa0", config.params.kappa0);
  meta.add("n_steps", config.n_steps);
  return meta;
}

void write_output(const Options& o, const SeriesTable& table, const Metadata& meta) {
  if (o.out.empty()) return;
  const std::string content = o.format == "json" ? to_json(table, meta)
                                                 : to_csv(table, meta);
  write_text_file(o.out, content);
  std::printf("wrote %s (%s)\n", o.out.c_str(), o.format.c_str());
}

int cmd_simulate(const Options& o) {
  const Method method = method_from_string(o.method);
  const RunConfig config = resolve_config(o, method);
  if (o.dump_config) {
    std::fputs(config_to_json(config).c_str(), stdout);
    return 0;
  }

  Scenario scenario{method, config.params, config.n_steps};
  const ScenarioResult result = run_scenario(scenario);

  std::printf("method = %s\n", method_to_string(method).c_str());
  if (config.params.omega0 > 0.0)
    std::printf("Q = %.10g\n", adiabaticity_q(config.params));
  else
    std::printf("Q = undefined (omega0 = 0)\n");
  if (config.params.alpha > 0.0) {
    const CrossingTimes tc = crossing_times(config.params);
    std::printf("crossing times: t12 = %.10g, t13 = %.10g, t23 = %.10g\n", tc.t12,
                tc.t13, tc.t23);
  }
  std::printf("window = [%.10g, %.10g], n_steps = %d (run at %d)\n", config.params.t_i,
              config.params.t_f, config.n_steps, result.trajectory.grid().n_steps);
  const auto& final_state = result.trajectory.final_state();
  std::printf("final populations:");
  for (Eigen::Index k = 0; k < final_state.size(); ++k)
    std::printf(" p%d = %.10g", static_cast<int>(k + 1), std::norm(final_state[k]));
  std::printf("\n");
  std::printf("fidelity = %.12g\n", result.fidelity);

  Metadata meta = base_metadata("simulate", config, method);
  meta.add("n_steps_run", result.trajectory.grid().n_steps);
  write_output(o, trajectory_table(result.trajectory), meta);
  return 0;
}

int cmd_sweep(const Options& o) {
  const Method method = method_from_string(o.method);
  const RunConfig config = resolve_config(o, method);
  if (o.dump_config) {
    std::fputs(config_to_json(config).c_str(), stdout);
    return 0;
  }
  const WindowPolicy window = parse_window(o.window);

  // Default scan ranges; the grid is chosen to cover both the adiabatic
  // threshold region (alpha around 0.2..0.3) and the large-amplitude corner.
  std::vector<double> omega0_values{0.05, 0.1, 0.2, 0.4, 0.6, 0.8, 1.0, 1.5, 2.0};
  std::vector<double> alpha_values;
  for (int k = 1; k <= 20; ++k) alpha_values.push_back(0.05 * k);

  const int n_threads =
      static_cast<int>(std::min(8u, std::max(1u, std::thread::hardware_concurrency())));
  const SweepResult sweep =
      sweep_final_population(method, omega0_values, alpha_values, window,
                             config.params, config.n_steps, n_threads);

  std::printf("method = %s\n", method_to_string(method).c_str());
  std::printf("window = %s\n", o.window.c_str());
  std::printf("grid = %zu omega0 x %zu alpha\n", sweep.omega0_values.size(),
              sweep.alpha_values.size());
  double lo = INFINITY, hi = -INFINITY;
  int valid = 0;
  for (double v : sweep.population) {
    if (std::isnan(v)) continue;
    ++valid;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (valid > 0)
    std::printf("population: min = %.10g, max = %.10g\n", lo, hi);
  std::printf("failed cells = %zu\n", sweep.diagnostics.size());
  for (std::size_t k = 0; k < sweep.diagnostics.size() && k < 5; ++k)
    std::fprintf(stderr, "  %s\n", sweep.diagnostics[k].c_str());

  Metadata meta = base_metadata("sweep", config, method);
  meta.add("window", o.window);
  write_output(o, sweep_table(sweep), meta);
  return 0;
}

int cmd_design_lri(const Options& o) {
  const RunConfig config = resolve_config(o, std::nullopt);
  if (o.dump_config) {
    std::fputs(config_to_json(config).c_str(), stdout);
    return 0;
  }
  const double t12 = crossing_times(config.params).t12;
  const int n_points = o.steps > 0 ? o.steps : 1000;
  const DesignReport report =
      lri_design_report(config.params.t_i, config.params.t_f, t12, n_points);

  const AnsatzCoeffs coeffs = solve_ansatz(config.params.t_i, config.params.t_f, t12);
  double max_residual = 0.0;
  for (double r : coeffs.boundary_residuals())
    max_residual = std::max(max_residual, std::abs(r));
  std::printf("window = [%.10g, %.10g], t12 = %.10g, points = %d\n", config.params.t_i,
              config.params.t_f, t12, n_points);
  std::printf("max |boundary residual| = %.3g\n", max_residual);
  const auto [omega_lo, omega_hi] =
      std::minmax_element(report.omega_lr.begin(), report.omega_lr.end());
  const auto [delta_lo, delta_hi] =
      std::minmax_element(report.delta_lr.begin(), report.delta_lr.end());
  std::printf("omega_lr in [%.10g, %.10g]\n", *omega_lo, *omega_hi);
  std::printf("delta_lr in [%.10g, %.10g]\n", *delta_lo, *delta_hi);

  Metadata meta = base_metadata("design-lri", config, std::nullopt);
  meta.add("t12", t12);
  meta.add("points", n_points);
  write_output(o, design_report_table(report), meta);
  return 0;
}

int cmd_fidelity_curve(const Options& o) {
  const RunConfig config = resolve_config(o, std::nullopt);
  if (o.dump_config) {
    std::fputs(config_to_json(config).c_str(), stdout);
    return 0;
  }
  std::vector<double> t_totals;
  for (int k = 0; k < 20; ++k) t_totals.push_back(2.0 + 18.0 * k / 19.0);
  const FidelityCurve curve = fidelity_vs_duration(t_totals, config.params,
                                                   config.n_steps);

  auto print_range = [](const char* name, const std::vector<double>& f) {
    double lo = INFINITY, hi = -INFINITY;
    for (double v : f)
      if (!std::isnan(v)) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    std::printf("%s in [%.10g, %.10g]\n", name, lo, hi);
  };
  std::printf("points = %zu, t_total in [%.10g, %.10g]\n", t_totals.size(),
              t_totals.front(), t_totals.back());
  print_range("f_adiabatic", curve.f_adiabatic);
  print_range("f_tqd", curve.f_tqd);
  print_range("f_lri", curve.f_lri);

  Metadata meta = base_metadata("fidelity-curve", config, std::nullopt);
  meta.add("points", static_cast<int>(t_totals.size()));
  write_output(o, curve_table(curve), meta);
  return 0;
}

int run_parsed(const CLI::App& app, const Options& o) {
  if (app.got_subcommand("simulate")) return cmd_simulate(o);
  if (app.got_subcommand("sweep")) return cmd_sweep(o);
  if (app.got_subcommand("design-lri")) return cmd_design_lri(o);
  return cmd_fidelity_curve(o);
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Control-field design and driven dynamics for fast entangled-state "
               "preparation in two exchange-coupled spins"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub, bool with_method, bool with_window) {
    if (with_method)
      sub->add_option("--method", o.method, "Protocol: adiabatic | tqd | lri")
          ->required();
    sub->add_option("--params", o.params,
                    "JSON parameter file, or \"default\" for built-in defaults")
        ->capture_default_str();
    sub->add_option("--set", o.sets, "Override one parameter as key=value (repeatable)");
    sub->add_option("--out", o.out, "Write the result table to this file");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    if (with_window)
      sub->add_option("--window", o.window,
                      "Per-cell window: follow-crossing | fixed:<t_total>")
          ->capture_default_str();
    sub->add_option("--steps", o.steps,
                    "Override the grid resolution (report points for design-lri)");
    sub->add_flag("--dump-config", o.dump_config,
                  "Print the effective configuration as JSON and exit");
  };

  add_common(app.add_subcommand("simulate",
                                "Propagate one scenario and report the fidelity"),
             true, false);
  add_common(app.add_subcommand("sweep",
                                "Scan final target population over (omega0, alpha)"),
             true, true);
  add_common(app.add_subcommand("design-lri",
                                "Solve the invariant-based design and emit the fields"),
             false, false);
  add_common(app.add_subcommand("fidelity-curve",
                                "All three protocols versus total duration"),
             false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? 0 : 2;
  }

  try {
    return run_parsed(app, o);
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
}

}  // namespace bellsta::cli
