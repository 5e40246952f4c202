#include "bellsta/lri.hpp"

#include <cmath>
#include <complex>

#include "bellsta/errors.hpp"

namespace bellsta {
namespace {

using std::complex;
const complex<double> kI(0.0, 1.0);
const double kPi = 3.14159265358979323846;
const double kSqrt2 = std::sqrt(2.0);

// Evaluates the deriv-th derivative of sum_j c[j] u^j with respect to u.
template <std::size_t N>
double poly_eval(const std::array<double, N>& c, double u, int deriv) {
  double acc = 0.0;
  for (int j = static_cast<int>(N) - 1; j >= deriv; --j) {
    double factor = 1.0;
    for (int m = 0; m < deriv; ++m) factor *= static_cast<double>(j - m);
    acc = acc * u + factor * c[static_cast<std::size_t>(j)];
  }
  return acc;
}

// Residuals of all eleven conditions in the scaled variable u (L-free).
std::array<double, 11> residuals_u(const AnsatzCoeffs& c, double u12) {
  return {poly_eval(c.g, 0.0, 0),
          poly_eval(c.g, 0.0, 1),
          poly_eval(c.g, 1.0, 0) - kPi,
          poly_eval(c.g, 1.0, 1),
          poly_eval(c.g, u12, 2),
          poly_eval(c.b, 0.0, 0) - kPi / 2.0,
          poly_eval(c.b, u12, 0) - kPi / 2.0,
          poly_eval(c.b, 1.0, 0) - kPi / 2.0,
          poly_eval(c.b, 0.0, 1) + kPi,
          poly_eval(c.b, 1.0, 1) - kPi,
          poly_eval(c.b, u12, 2)};
}

}  // namespace

double AnsatzCoeffs::gamma(double t, int deriv) const {
  const double len = length();
  const double u = (t - t_i) / len;
  return poly_eval(g, u, deriv) / std::pow(len, deriv);
}

double AnsatzCoeffs::beta(double t, int deriv) const {
  const double len = length();
  const double u = (t - t_i) / len;
  return poly_eval(b, u, deriv) / std::pow(len, deriv);
}

std::array<double, 11> AnsatzCoeffs::boundary_residuals() const {
  const double len = length();
  const double u12 = (t12 - t_i) / len;
  std::array<double, 11> r = residuals_u(*this, u12);
  // Convert derivative conditions to time units.
  for (int idx : {1, 3, 8, 9}) r[static_cast<std::size_t>(idx)] /= len;
  for (int idx : {4, 10}) r[static_cast<std::size_t>(idx)] /= len * len;
  return r;
}

AnsatzCoeffs solve_ansatz(double t_i, double t_f, double t12) {
  if (!(std::isfinite(t_i) && std::isfinite(t_f) && std::isfinite(t12)))
    throw DomainError("solve_ansatz: times must be finite");
  if (!(t_i < t12 && t12 < t_f))
    throw DomainError("solve_ansatz requires t_i < t12 < t_f");

  AnsatzCoeffs coeffs;
  coeffs.t_i = t_i;
  coeffs.t_f = t_f;
  coeffs.t12 = t12;
  const double u12 = (t12 - t_i) / (t_f - t_i);

  // gamma: g0 = g1 = 0 meet the t_i conditions exactly; the remaining three
  // conditions form a 3x3 system for (g2, g3, g4) whose determinant
  // 12 u12^2 - 12 u12 + 2 vanishes at u12 = (3 +- sqrt(3))/6.
  const double det = 12.0 * u12 * u12 - 12.0 * u12 + 2.0;
  if (std::abs(det) < 1e-8)
    throw NumericalError("solve_ansatz: degenerate time placement, "
                         "(t12 - t_i)/(t_f - t_i) too close to (3 +- sqrt(3))/6");
  Eigen::Matrix3d a;
  a << 1.0, 1.0, 1.0,
       2.0, 3.0, 4.0,
       2.0, 6.0 * u12, 12.0 * u12 * u12;
  const Eigen::Vector3d g_tail =
      a.colPivHouseholderQr().solve(Eigen::Vector3d(kPi, 0.0, 0.0));
  coeffs.g = {0.0, 0.0, g_tail[0], g_tail[1], g_tail[2]};

  // beta: six conditions on seven coefficients; the spare degree of freedom
  // is fixed by minimizing the integral of beta'''(u)^2. Stationarity of the
  // Lagrangian gives a 13x13 KKT system in (b, multipliers): the quadratic
  // form q_jk = j(j-1)(j-2) k(k-1)(k-2) / (j+k-5) integrates
  // (u^{j-3})''' (u^{k-3})''' over [0, 1].
  Eigen::Matrix<double, 13, 13> kkt = Eigen::Matrix<double, 13, 13>::Zero();
  for (int j = 3; j <= 6; ++j)
    for (int k = 3; k <= 6; ++k) {
      const double wj = static_cast<double>(j * (j - 1) * (j - 2));
      const double wk = static_cast<double>(k * (k - 1) * (k - 2));
      kkt(j, k) = 2.0 * wj * wk / static_cast<double>(j + k - 5);
    }
  Eigen::Matrix<double, 6, 7> constraints;
  Eigen::Matrix<double, 6, 1> targets;
  for (int j = 0; j < 7; ++j) {
    constraints(0, j) = j == 0 ? 1.0 : 0.0;                     // beta(0)
    constraints(1, j) = std::pow(u12, j);                       // beta(u12)
    constraints(2, j) = 1.0;                                    // beta(1)
    constraints(3, j) = j == 1 ? 1.0 : 0.0;                     // beta'(0)
    constraints(4, j) = static_cast<double>(j);                 // beta'(1)
    constraints(5, j) =                                         // beta''(u12)
        j >= 2 ? static_cast<double>(j * (j - 1)) * std::pow(u12, j - 2) : 0.0;
  }
  targets << kPi / 2.0, kPi / 2.0, kPi / 2.0, -kPi, kPi, 0.0;
  kkt.block<6, 7>(7, 0) = constraints;
  kkt.block<7, 6>(0, 7) = constraints.transpose();
  Eigen::Matrix<double, 13, 1> rhs = Eigen::Matrix<double, 13, 1>::Zero();
  rhs.tail<6>() = targets;
  const auto decomposition = kkt.fullPivLu();
  Eigen::Matrix<double, 13, 1> solution = decomposition.solve(rhs);
  // One step of iterative refinement: the KKT blocks mix scales (the
  // quadratic form reaches ~4e3 while constraint rows are O(1)), which costs
  // the direct solve a couple of digits of the boundary conditions.
  solution += decomposition.solve(rhs - kkt * solution);
  for (int j = 0; j < 7; ++j) coeffs.b[static_cast<std::size_t>(j)] = solution[j];

  const std::array<double, 11> res = residuals_u(coeffs, u12);
  for (double r : res)
    if (!(std::abs(r) < 1e-10))
      throw NumericalError("solve_ansatz: boundary-condition residual above 1e-10");
  return coeffs;
}

LriFields invert_fields(double t, const AnsatzCoeffs& coeffs) {
  if (t < coeffs.t_i || t > coeffs.t_f)
    throw DomainError("invert_fields: t outside the design window");

  LriFields f;
  f.gamma = coeffs.gamma(t);
  f.beta = coeffs.beta(t);
  const double sin_b = std::sin(f.beta);
  if (!(std::abs(sin_b) > 0.1))
    throw NumericalError("invert_fields: sin(beta) <= 0.1, coupling ill-conditioned");
  f.omega_lr = coeffs.gamma(t, 1) / (kSqrt2 * sin_b);

  const double eps = 1e-9 * coeffs.length();
  if (t - coeffs.t_i <= eps) {
    // One-sided limit: gamma' and sin(gamma) vanish together at the edge and
    // cos(beta) cancels the remaining divergence, leaving -3 beta'(t_i).
    f.delta_lr = -3.0 * coeffs.beta(coeffs.t_i, 1);
  } else if (coeffs.t_f - t <= eps) {
    f.delta_lr = -3.0 * coeffs.beta(coeffs.t_f, 1);
  } else {
    const double sin_g = std::sin(f.gamma);
    const double cos_b = std::cos(f.beta);
    // Away from the edges cos(beta) stays O(1); a vanishing sin(gamma) there
    // means the design itself is singular (gamma hits 0 or pi inside).
    if (std::abs(sin_g) < 1e-12 && std::abs(cos_b) > 1e-5)
      throw NumericalError("invert_fields: sin(gamma) vanishes inside the window "
                           "(degenerate design)");
    f.delta_lr = kSqrt2 * f.omega_lr * (std::cos(f.gamma) / sin_g) * cos_b -
                 coeffs.beta(t, 1);
  }
  return f;
}

Eigen::Matrix2cd invariant_matrix(double t, const AnsatzCoeffs& coeffs, double kappa0) {
  const double g = coeffs.gamma(t);
  const double b = coeffs.beta(t);
  const complex<double> off = std::sin(g) * std::exp(kI * b);
  Eigen::Matrix2cd m;
  m << std::cos(g), off, std::conj(off), -std::cos(g);
  return 0.5 * kappa0 * m;
}

Eigen::Matrix2cd invariant_matrix_dot(double t, const AnsatzCoeffs& coeffs,
                                      double kappa0) {
  const double g = coeffs.gamma(t);
  const double b = coeffs.beta(t);
  const double gd = coeffs.gamma(t, 1);
  const double bd = coeffs.beta(t, 1);
  const complex<double> off =
      (gd * std::cos(g) + kI * bd * std::sin(g)) * std::exp(kI * b);
  Eigen::Matrix2cd m;
  m << -gd * std::sin(g), off, std::conj(off), gd * std::sin(g);
  return 0.5 * kappa0 * m;
}

Eigen::Vector2cd invariant_eigenstate_plus(double t, const AnsatzCoeffs& coeffs) {
  const double g = coeffs.gamma(t);
  const double b = coeffs.beta(t);
  return Eigen::Vector2cd(std::cos(g / 2.0) * std::exp(kI * b), std::sin(g / 2.0));
}

Eigen::Vector2cd invariant_eigenstate_minus(double t, const AnsatzCoeffs& coeffs) {
  const double g = coeffs.gamma(t);
  const double b = coeffs.beta(t);
  return Eigen::Vector2cd(-std::sin(g / 2.0) * std::exp(kI * b), std::cos(g / 2.0));
}

Eigen::Matrix2cd lri_hamiltonian(double t, const AnsatzCoeffs& coeffs) {
  const LriFields f = invert_fields(t, coeffs);
  const double c = f.omega_lr / kSqrt2;
  Eigen::Matrix2cd h;
  h << 0.5 * f.delta_lr, c, c, -0.5 * f.delta_lr;
  return h;
}

HamiltonianSampler make_lri_sampler(const AnsatzCoeffs& coeffs) {
  return {[coeffs](double t) -> Eigen::MatrixXcd { return lri_hamiltonian(t, coeffs); },
          2, Basis::Diabatic2};
}

}  // namespace bellsta
