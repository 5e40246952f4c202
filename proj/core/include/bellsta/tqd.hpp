#pragma once

#include <Eigen/Dense>

#include "bellsta/params.hpp"
#include "bellsta/propagate.hpp"

namespace bellsta {

/// Counterdiabatic driving quantities at one instant.
struct TqdFields {
  double theta = 0.0;      ///< mixing angle, theta = atan2(-sqrt(2)*Omega, Delta)
  double theta_dot = 0.0;  ///< its exact time derivative
  double omega_a = 0.0;    ///< auxiliary drive amplitude, omega_a == theta_dot / 2
};

/// Mixing angle between the diabatic and adiabatic two-level bases,
/// theta(t) = atan2(-sqrt(2)*Omega(t), Delta(t)) in (-pi, 0] for Omega >= 0.
/// At the fully degenerate point Omega = Delta = 0 it returns 0 by convention.
double mixing_angle(double t, const SystemParams& p);

/// Analytic d(theta)/dt = -sqrt(2) (Omega' Delta - Omega Delta') / (Delta^2 + 2 Omega^2).
/// Throws NumericalError at a fully degenerate point (Delta^2 + 2 Omega^2 == 0).
double mixing_angle_rate(double t, const SystemParams& p);

/// Bundles the above; omega_a is theta_dot / 2 exactly (same expression).
TqdFields tqd_fields(double t, const SystemParams& p);

/// Counterdiabatic correction H1 = [[0, i*omega_a], [-i*omega_a, 0]]: purely
/// off-diagonal and anti-symmetric in phase, it cancels non-adiabatic
/// transitions of the two-level crossing exactly.
Eigen::Matrix2cd counterdiabatic_term(double t, const SystemParams& p);

/// Total two-level Hamiltonian with the counterdiabatic correction added:
/// reduced_hamiltonian2 + counterdiabatic_term.
Eigen::Matrix2cd tqd_hamiltonian(double t, const SystemParams& p);

/// Phase angle zeta(t) = 2*atan2(-theta_dot, sqrt(2)*Omega) that rotates the
/// complex off-diagonal coupling (Omega/sqrt(2), omega_a) onto a real axis.
/// Requires Omega(t) > 0 (NumericalError otherwise: phase undefined).
double phase_angle_zeta(double t, const SystemParams& p);

/// The corrected Hamiltonian re-expressed with a real coupling by the
/// diagonal gauge R = diag(e^{i zeta/4}, e^{-i zeta/4}):
///   R (H + H1) R^+ + i dR/dt R^+ = [[delta_eff, omega_eff], [omega_eff, -delta_eff]].
struct RotatedTqdForm {
  double zeta = 0.0;      ///< phase_angle_zeta(t)
  double zeta_dot = 0.0;  ///< central finite difference, h = (t_f - t_i) * 1e-6
  /// Real coupling of the rotated matrix: sqrt(Omega^2/2 + omega_a^2).
  double omega_eff = 0.0;
  /// Half the diagonal gap of the rotated matrix: (Delta - zeta_dot/2) / 2.
  double delta_eff = 0.0;
  /// Quoted effective amplitude sqrt(Omega^2 + omega_a^2): the bare pulse and
  /// auxiliary amplitudes added in quadrature. Recorded for comparison with
  /// the common normalization of the coupling as a bare Rabi amplitude; it is
  /// NOT the matrix element itself (that is omega_eff, whose pulse term
  /// carries the 1/sqrt(2) of the triplet coupling).
  double omega_quoted = 0.0;
  /// Alternative bookkeeping (Delta - zeta_dot) / 2, which arises when the
  /// full gauge phase is assigned to one level only. Recorded for comparison;
  /// delta_eff is the self-consistent value.
  double delta_half_gauge = 0.0;
  Eigen::Matrix2cd h_rotated;
};

/// Computes the rotated form at time t. Requires Omega(t) > 0.
RotatedTqdForm rotated_tqd_form(double t, const SystemParams& p);

/// Sampler for tqd_hamiltonian.
HamiltonianSampler make_tqd_sampler(const SystemParams& p);

}  // namespace bellsta
