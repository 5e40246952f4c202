#pragma once

#include <Eigen/Dense>
#include <array>

#include "bellsta/propagate.hpp"

namespace bellsta {

/// Polynomial angle ansatz for the dynamical-invariant protocol, expressed in
/// the scaled time u = (t - t_i) / (t_f - t_i) in [0, 1].
///
/// gamma (quartic, coefficients g[0..4]) satisfies exactly:
///   gamma(t_i) = 0, gamma'(t_i) = 0, gamma(t_f) = pi, gamma'(t_f) = 0,
///   gamma''(t12) = 0.
/// beta (degree six, coefficients b[0..6]) satisfies exactly:
///   beta(t_i) = pi/2, beta(t12) = pi/2, beta(t_f) = pi/2,
///   beta'(t_i) = -pi/L, beta'(t_f) = +pi/L, beta''(t12) = 0   (L = t_f - t_i).
///
/// A degree-five beta cannot satisfy those six conditions: at the symmetric
/// placement t12 = (t_i + t_f)/2 the 6x6 linear system is rank deficient and
/// inconsistent (no quintic exists). The coefficient space is therefore
/// extended by one degree and the remaining freedom fixed by minimizing the
/// integral of beta'''(u)^2, which keeps the solution unique, symmetric under
/// time reflection, and continuous in t12. At the symmetric placement the
/// minimizer is the closed-form even polynomial
///   beta(u) = pi/2 - 4*pi*(u - 1/2)^4 + 16*pi*(u - 1/2)^6.
struct AnsatzCoeffs {
  double t_i = 0.0;
  double t_f = 1.0;
  double t12 = 0.5;
  std::array<double, 5> g{};  ///< gamma(u) = sum_j g[j] u^j
  std::array<double, 7> b{};  ///< beta(u)  = sum_j b[j] u^j

  double length() const { return t_f - t_i; }

  /// gamma and beta (and their time derivatives, deriv = 0, 1, 2) at time t.
  /// Derivatives are with respect to t, i.e. scaled by 1/L^deriv.
  double gamma(double t, int deriv = 0) const;
  double beta(double t, int deriv = 0) const;

  /// Residuals of all eleven imposed conditions, in the order
  ///   [gamma(t_i), gamma'(t_i), gamma(t_f) - pi, gamma'(t_f), gamma''(t12),
  ///    beta(t_i) - pi/2, beta(t12) - pi/2, beta(t_f) - pi/2,
  ///    beta'(t_i) + pi/L, beta'(t_f) - pi/L, beta''(t12)].
  std::array<double, 11> boundary_residuals() const;
};

/// Solves both polynomial systems for a window [t_i, t_f] with interior
/// crossing time t12. Requires t_i < t12 < t_f (DomainError). The gamma
/// system becomes singular when (t12 - t_i)/(t_f - t_i) = (3 +- sqrt(3))/6;
/// at (or numerically near) those placements a NumericalError identifies the
/// degenerate time placement. Solutions are verified against the boundary
/// conditions (residuals < 1e-10) before being returned.
AnsatzCoeffs solve_ansatz(double t_i, double t_f, double t12);

/// Control fields at one instant of the inverse-engineered protocol.
struct LriFields {
  double gamma = 0.0;
  double beta = 0.0;
  double omega_lr = 0.0;  ///< coupling amplitude
  double delta_lr = 0.0;  ///< detuning
};

/// Inverts the invariant's equation of motion for the control fields:
///   omega_lr = gamma' / (sqrt(2) sin(beta)),
///   delta_lr = sqrt(2) omega_lr cot(gamma) cos(beta) - beta'.
/// At the window endpoints, where gamma' and sin(gamma) vanish together,
/// delta_lr takes its one-sided limit -3 beta'(endpoint). Throws
/// NumericalError if sin(beta) <= 0.1 (small-denominator guard) or if
/// sin(gamma) vanishes strictly inside the window (degenerate design).
LriFields invert_fields(double t, const AnsatzCoeffs& coeffs);

/// The dynamical invariant
///   I(t) = (kappa0/2) * (sin g cos b * sx - sin g sin b * sy + cos g * sz)
/// with (sx, sy, sz) the Pauli matrices, g = gamma(t), b = beta(t). Its
/// eigenvalues are +-kappa0/2 for all t.
Eigen::Matrix2cd invariant_matrix(double t, const AnsatzCoeffs& coeffs, double kappa0);

/// Analytic d/dt of invariant_matrix (for checking dI/dt = i[I, H]).
Eigen::Matrix2cd invariant_matrix_dot(double t, const AnsatzCoeffs& coeffs,
                                      double kappa0);

/// Normalized eigenvectors of invariant_matrix for eigenvalues +kappa0/2 and
/// -kappa0/2:
///   |+> = (cos(g/2) e^{i b}, sin(g/2)),  |-> = (-sin(g/2) e^{i b}, cos(g/2)).
Eigen::Vector2cd invariant_eigenstate_plus(double t, const AnsatzCoeffs& coeffs);
Eigen::Vector2cd invariant_eigenstate_minus(double t, const AnsatzCoeffs& coeffs);

/// Two-level Hamiltonian realizing the designed fields:
///   [[ delta_lr/2, omega_lr/sqrt(2) ], [ omega_lr/sqrt(2), -delta_lr/2 ]].
/// By construction the invariant is dynamical under it:
///   dI/dt = i [I(t), H(t)] for t_i < t < t_f.
Eigen::Matrix2cd lri_hamiltonian(double t, const AnsatzCoeffs& coeffs);

/// Sampler for lri_hamiltonian.
HamiltonianSampler make_lri_sampler(const AnsatzCoeffs& coeffs);

}  // namespace bellsta
