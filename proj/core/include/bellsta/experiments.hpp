#pragma once

#include <string>
#include <vector>

#include "bellsta/params.hpp"
#include "bellsta/propagate.hpp"

namespace bellsta {

/// The three preparation protocols.
enum class Method { Adiabatic, Tqd, Lri };

/// Parses "adiabatic" | "tqd" | "lri" (DomainError otherwise).
Method method_from_string(const std::string& name);
std::string method_to_string(Method method);

/// A named run: protocol, physical parameters, grid resolution. The evolution
/// window is params.t_i .. params.t_f. Initial state |up,up>, target |psi+>.
struct Scenario {
  Method method = Method::Adiabatic;
  SystemParams params;
  int n_steps = 20000;

  /// Protocol-default configurations:
  ///   adiabatic: omega0 = 0.5, alpha = sqrt(0.05)  (Q = 0.1), window [0, 120]
  ///   tqd:       omega0 = 0.1, alpha = 1           (Q = 50),  window [0, 6]
  ///   lri:       alpha = 1, window [0, 6] (crossing at t12 = 3)
  /// with xi = omega = kappa0 = 1, t_width = 20, n_steps = 20000 throughout.
  static Scenario with_defaults(Method method);
};

struct ScenarioResult {
  Trajectory trajectory;
  double fidelity = 0.0;  ///< |<target | psi(t_f)>|^2
};

/// Validates the scenario (params; for Lri additionally t_i < t12 < t_f),
/// builds the protocol's two-level Hamiltonian, propagates |up,up> across the
/// window with automatic refinement, and reports the fidelity against |psi+>.
ScenarioResult run_scenario(const Scenario& s, const ConvergencePolicy& policy = {});

/// How the evolution window is chosen for each sweep cell.
struct WindowPolicy {
  enum class Kind {
    FollowCrossing,  ///< window [0, 2 * t12(alpha)], tracking the crossing
    Fixed            ///< window [0, t_total] regardless of alpha
  };
  Kind kind = Kind::FollowCrossing;
  double t_total = 0.0;  ///< used by Fixed only

  static WindowPolicy follow_crossing() { return {Kind::FollowCrossing, 0.0}; }
  static WindowPolicy fixed(double t_total) { return {Kind::Fixed, t_total}; }
};

/// Final target population over a (omega0, alpha) grid.
struct SweepResult {
  std::vector<double> omega0_values;  ///< ascending
  std::vector<double> alpha_values;   ///< ascending
  /// Row-major with omega0 as the outer index:
  /// population[i * alpha_values.size() + j] belongs to
  /// (omega0_values[i], alpha_values[j]). NaN marks a failed cell.
  std::vector<double> population;
  /// One message per failed cell, in cell-index order.
  std::vector<std::string> diagnostics;

  double at(int i_omega0, int j_alpha) const;
};

/// Runs one scenario per grid cell (method with base params, omega0 and alpha
/// replaced per cell, window from the policy) and records the final |psi+>
/// population. A failing cell yields NaN plus a diagnostic message; it never
/// aborts the sweep. Cells are independent; with n_threads > 1 they are
/// computed concurrently but the result is bit-identical to the serial order.
SweepResult sweep_final_population(Method method,
                                   const std::vector<double>& omega0_values,
                                   const std::vector<double>& alpha_values,
                                   const WindowPolicy& window, const SystemParams& base,
                                   int n_steps, int n_threads = 1);

/// Fidelity of all three protocols versus total transition time.
struct FidelityCurve {
  std::vector<double> t_total;
  std::vector<double> f_adiabatic;
  std::vector<double> f_tqd;
  std::vector<double> f_lri;
};

/// For each requested duration the window is [0, t_total] and alpha is set to
/// sqrt(2*(omega + 2*xi)/t_total) so the crossing sits at mid-window. The
/// pulse amplitude stays at each protocol's default (adiabatic 0.5, tqd 0.1);
/// the inverse-engineered design scales directly with (0, t_total, t_total/2).
/// xi, omega, t_width and kappa0 come from `base`. A failing point yields NaN.
FidelityCurve fidelity_vs_duration(const std::vector<double>& t_totals,
                                   const SystemParams& base, int n_steps);

/// Designed-field report: the polynomial angles and the control fields they
/// imply, sampled on an n_points uniform grid spanning [t_i, t_f] inclusive.
struct DesignReport {
  std::vector<double> t;
  std::vector<double> gamma;
  std::vector<double> beta;
  std::vector<double> omega_lr;
  std::vector<double> delta_lr;
};

DesignReport lri_design_report(double t_i, double t_f, double t12,
                               int n_points = 1000);

}  // namespace bellsta
