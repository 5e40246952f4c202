#pragma once

#include <string>

namespace bellsta {

/// Physical parameters of the driven two-spin system, in units of the
/// exchange coupling xi (energies) and 1/xi (times).
///
/// The two spins couple through an exchange term 4*xi*SAz*SBz and share a
/// control field with a rotating transverse part of envelope
///   Omega(t) = omega0 * exp(-(t - t12)^2 / t_width^2)
/// rotating at frequency omega, plus a linearly swept longitudinal part
/// bz(t) = alpha^2 * t. kappa0 sets the (conserved) eigenvalue scale of the
/// dynamical invariant used by the inverse-engineering protocol.
struct SystemParams {
  double xi = 1.0;       ///< exchange coupling (energy unit), > 0
  double omega = 1.0;    ///< rotation frequency of the transverse field
  double alpha = 1.0;    ///< sweep-rate parameter: bz(t) = alpha^2 * t, >= 0
  double omega0 = 0.1;   ///< peak Rabi amplitude of the pulse, >= 0
  double t_width = 20.0; ///< Gaussian pulse width T, > 0
  double t_i = 0.0;      ///< start of the evolution window
  double t_f = 6.0;      ///< end of the evolution window, > t_i
  double kappa0 = 1.0;   ///< invariant eigenvalue scale, > 0

  /// Throws DomainError if any field is non-finite or out of range.
  void validate() const;
};

/// Times at which pairs of diabatic levels cross under the linear sweep:
/// t13 between the two stretched states, t12/t23 between a stretched state
/// and the entangled target state. They satisfy
///   t13 = omega / alpha^2,  t12 = t13 + 2*xi/alpha^2,  t23 = t13 - 2*xi/alpha^2,
/// so t12 - t13 == t13 - t23 bit-exactly.
struct CrossingTimes {
  double t12 = 0.0;
  double t13 = 0.0;
  double t23 = 0.0;
};

/// Computes the level-crossing times. Requires alpha > 0 (DomainError).
CrossingTimes crossing_times(const SystemParams& p);

/// Adiabaticity parameter Q = alpha^2 / (2*omega0^2). Requires omega0 > 0
/// (DomainError). Q << 1 is the adiabatic regime, Q >> 1 the shortcut regime.
double adiabaticity_q(const SystemParams& p);

/// Uniform time grid with n_steps intervals (n_steps + 1 nodes).
struct TimeGrid {
  double t_i = 0.0;
  double t_f = 6.0;
  int n_steps = 20000;

  /// Throws DomainError unless t_f > t_i (finite) and n_steps >= 2.
  void validate() const;

  double dt() const { return (t_f - t_i) / n_steps; }
  int n_nodes() const { return n_steps + 1; }
  /// k-th node; node(0) == t_i and node(n_steps) == t_f exactly.
  double node(int k) const {
    return k == n_steps ? t_f : t_i + (t_f - t_i) * (static_cast<double>(k) / n_steps);
  }
};

/// A full run configuration: physical parameters plus grid resolution.
struct RunConfig {
  SystemParams params;
  int n_steps = 20000;
};

/// Parses a JSON object with keys drawn from exactly
///   {"xi","omega","alpha","omega0","t_width","t_i","t_f","kappa0","n_steps"}.
/// Missing keys take the documented defaults; t_f additionally defaults to
/// 2*t12 computed from the supplied (xi, omega, alpha). Unknown keys, type
/// mismatches, or malformed JSON throw DomainError. The result is validated.
RunConfig config_from_json(const std::string& text);

/// Serializes a configuration to a JSON object with exactly the nine keys
/// accepted by config_from_json, in that fixed order. Round-trips through
/// config_from_json to an identical configuration.
std::string config_to_json(const RunConfig& config);

}  // namespace bellsta
