#include "bellsta/experiments.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "bellsta/errors.hpp"
#include "bellsta/hamiltonian.hpp"
#include "bellsta/lri.hpp"
#include "bellsta/tqd.hpp"

namespace bellsta {
namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_ascending(const std::vector<double>& values, const char* name) {
  if (values.empty()) throw DomainError(std::string(name) + " range must be non-empty");
  for (std::size_t k = 0; k + 1 < values.size(); ++k)
    if (!(values[k] < values[k + 1]))
      throw DomainError(std::string(name) + " range must be strictly ascending");
}

HamiltonianSampler scenario_sampler(const Scenario& s) {
  switch (s.method) {
    case Method::Adiabatic: return make_reduced2_sampler(s.params);
    case Method::Tqd: return make_tqd_sampler(s.params);
    case Method::Lri: {
      const double t12 = crossing_times(s.params).t12;
      return make_lri_sampler(solve_ansatz(s.params.t_i, s.params.t_f, t12));
    }
  }
  throw DomainError("unknown method");
}

}  // namespace

Method method_from_string(const std::string& name) {
  if (name == "adiabatic") return Method::Adiabatic;
  if (name == "tqd") return Method::Tqd;
  if (name == "lri") return Method::Lri;
  throw DomainError("unknown method \"" + name + "\" (use adiabatic | tqd | lri)");
}

std::string method_to_string(Method method) {
  switch (method) {
    case Method::Adiabatic: return "adiabatic";
    case Method::Tqd: return "tqd";
    case Method::Lri: return "lri";
  }
  throw DomainError("unknown method");
}

Scenario Scenario::with_defaults(Method method) {
  Scenario s;
  s.method = method;
  switch (method) {
    case Method::Adiabatic:
      // Q = alpha^2 / (2 omega0^2) = 0.1: the slow-passage regime.
      s.params.omega0 = 0.5;
      s.params.alpha = std::sqrt(0.05);
      break;
    case Method::Tqd:
      // Q = 50: far too fast for bare adiabatic following, which is the
      // regime the counterdiabatic correction is for.
      s.params.omega0 = 0.1;
      s.params.alpha = 1.0;
      break;
    case Method::Lri:
      s.params.alpha = 1.0;
      break;
  }
  s.params.t_i = 0.0;
  s.params.t_f = 2.0 * crossing_times(s.params).t12;
  return s;
}

ScenarioResult run_scenario(const Scenario& s, const ConvergencePolicy& policy) {
  s.params.validate();
  const HamiltonianSampler sampler = scenario_sampler(s);
  const TimeGrid grid{s.params.t_i, s.params.t_f, s.n_steps};
  const QuantumState initial = QuantumState::basis_state(Basis::Diabatic2, 0);
  const QuantumState target = QuantumState::basis_state(Basis::Diabatic2, 1);
  Trajectory trajectory = propagate(sampler, initial, grid, policy);
  const double f = fidelity(trajectory.final_quantum_state(), target);
  return ScenarioResult{std::move(trajectory), f};
}

double SweepResult::at(int i_omega0, int j_alpha) const {
  const int n_alpha = static_cast<int>(alpha_values.size());
  if (i_omega0 < 0 || i_omega0 >= static_cast<int>(omega0_values.size()) ||
      j_alpha < 0 || j_alpha >= n_alpha)
    throw DomainError("sweep cell index out of range");
  return population[static_cast<std::size_t>(i_omega0 * n_alpha + j_alpha)];
}

SweepResult sweep_final_population(Method method,
                                   const std::vector<double>& omega0_values,
                                   const std::vector<double>& alpha_values,
                                   const WindowPolicy& window, const SystemParams& base,
                                   int n_steps, int n_threads) {
  require_ascending(omega0_values, "omega0");
  require_ascending(alpha_values, "alpha");
  if (window.kind == WindowPolicy::Kind::Fixed && !(window.t_total > 0.0))
    throw DomainError("fixed window length must be > 0");

  SweepResult result;
  result.omega0_values = omega0_values;
  result.alpha_values = alpha_values;
  const int n_cells = static_cast<int>(omega0_values.size() * alpha_values.size());
  result.population.assign(static_cast<std::size_t>(n_cells), kNaN);
  std::vector<std::string> failures(static_cast<std::size_t>(n_cells));

  const int n_alpha = static_cast<int>(alpha_values.size());
  auto run_cell = [&](int cell) {
    const double omega0 = omega0_values[static_cast<std::size_t>(cell / n_alpha)];
    const double alpha = alpha_values[static_cast<std::size_t>(cell % n_alpha)];
    try {
      Scenario s;
      s.method = method;
      s.params = base;
      s.params.omega0 = omega0;
      s.params.alpha = alpha;
      s.params.t_i = 0.0;
      s.params.t_f = window.kind == WindowPolicy::Kind::Fixed
                         ? window.t_total
                         : 2.0 * crossing_times(s.params).t12;
      s.n_steps = n_steps;
      result.population[static_cast<std::size_t>(cell)] = run_scenario(s).fidelity;
    } catch (const Error& e) {
      char prefix[64];
      std::snprintf(prefix, sizeof(prefix), "omega0=%g alpha=%g: ", omega0, alpha);
      failures[static_cast<std::size_t>(cell)] = std::string(prefix) + e.what();
    }
  };

  const int workers = std::max(1, std::min(n_threads, n_cells));
  if (workers == 1) {
    for (int cell = 0; cell < n_cells; ++cell) run_cell(cell);
  } else {
    // Cells are claimed through one atomic counter and written to
    // preallocated slots, so the result is identical to the serial order no
    // matter how the cells are scheduled.
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int cell = next.fetch_add(1); cell < n_cells; cell = next.fetch_add(1))
          run_cell(cell);
      });
    for (auto& worker : pool) worker.join();
  }

  for (auto& message : failures)
    if (!message.empty()) result.diagnostics.push_back(std::move(message));
  return result;
}

FidelityCurve fidelity_vs_duration(const std::vector<double>& t_totals,
                                   const SystemParams& base, int n_steps) {
  require_ascending(t_totals, "t_total");
  for (double tt : t_totals)
    if (!(tt > 0.0)) throw DomainError("t_total values must be > 0");

  const double omega0_adiabatic = Scenario::with_defaults(Method::Adiabatic).params.omega0;
  const double omega0_tqd = Scenario::with_defaults(Method::Tqd).params.omega0;

  FidelityCurve curve;
  curve.t_total = t_totals;
  for (double tt : t_totals) {
    // Place the crossing mid-window: t12 = (omega + 2 xi) / alpha^2 = tt / 2.
    const double alpha = std::sqrt(2.0 * (base.omega + 2.0 * base.xi) / tt);
    auto point = [&](Method method, double omega0) {
      Scenario s;
      s.method = method;
      s.params = base;
      s.params.omega0 = omega0;
      s.params.alpha = alpha;
      s.params.t_i = 0.0;
      s.params.t_f = tt;
      s.n_steps = n_steps;
      try {
        return run_scenario(s).fidelity;
      } catch (const Error&) {
        return kNaN;
      }
    };
    curve.f_adiabatic.push_back(point(Method::Adiabatic, omega0_adiabatic));
    curve.f_tqd.push_back(point(Method::Tqd, omega0_tqd));
    curve.f_lri.push_back(point(Method::Lri, base.omega0));
  }
  return curve;
}

DesignReport lri_design_report(double t_i, double t_f, double t12, int n_points) {
  if (n_points < 2) throw DomainError("design report needs n_points >= 2");
  const AnsatzCoeffs coeffs = solve_ansatz(t_i, t_f, t12);
  DesignReport report;
  report.t.reserve(static_cast<std::size_t>(n_points));
  for (int k = 0; k < n_points; ++k) {
    const double t = k == n_points - 1
                         ? t_f
                         : t_i + (t_f - t_i) * (static_cast<double>(k) / (n_points - 1));
    const LriFields f = invert_fields(t, coeffs);
    report.t.push_back(t);
    report.gamma.push_back(f.gamma);
    report.beta.push_back(f.beta);
    report.omega_lr.push_back(f.omega_lr);
    report.delta_lr.push_back(f.delta_lr);
  }
  return report;
}

}  // namespace bellsta
