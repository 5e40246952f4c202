#include "bellsta/tqd.hpp"

#include <cmath>
#include <complex>

#include "bellsta/errors.hpp"
#include "bellsta/hamiltonian.hpp"

namespace bellsta {
namespace {

const std::complex<double> kI(0.0, 1.0);
const double kSqrt2 = std::sqrt(2.0);

}  // namespace

double mixing_angle(double t, const SystemParams& p) {
  // atan2(0, 0) == 0, so the fully degenerate point falls back to 0.
  return std::atan2(-kSqrt2 * gaussian_pulse(t, p), detuning(t, p));
}

double mixing_angle_rate(double t, const SystemParams& p) {
  const double pulse = gaussian_pulse(t, p);
  const double pulse_dot = gaussian_pulse_dot(t, p);
  const double delta = detuning(t, p);
  const double delta_dot = -p.alpha * p.alpha;
  const double denom = delta * delta + 2.0 * pulse * pulse;
  if (denom == 0.0)
    throw NumericalError("mixing_angle_rate: degenerate point Omega = Delta = 0");
  return -kSqrt2 * (pulse_dot * delta - pulse * delta_dot) / denom;
}

TqdFields tqd_fields(double t, const SystemParams& p) {
  TqdFields f;
  f.theta = mixing_angle(t, p);
  f.theta_dot = mixing_angle_rate(t, p);
  f.omega_a = f.theta_dot / 2.0;
  return f;
}

Eigen::Matrix2cd counterdiabatic_term(double t, const SystemParams& p) {
  const double omega_a = mixing_angle_rate(t, p) / 2.0;
  Eigen::Matrix2cd h;
  h << 0.0, kI * omega_a, -kI * omega_a, 0.0;
  return h;
}

Eigen::Matrix2cd tqd_hamiltonian(double t, const SystemParams& p) {
  return reduced_hamiltonian2(t, p) + counterdiabatic_term(t, p);
}

double phase_angle_zeta(double t, const SystemParams& p) {
  const double pulse = gaussian_pulse(t, p);
  if (!(pulse > 0.0))
    throw NumericalError("phase_angle_zeta: undefined where Omega(t) == 0");
  return 2.0 * std::atan2(-mixing_angle_rate(t, p), kSqrt2 * pulse);
}

RotatedTqdForm rotated_tqd_form(double t, const SystemParams& p) {
  RotatedTqdForm f;
  f.zeta = phase_angle_zeta(t, p);
  const double h = (p.t_f - p.t_i) * 1e-6;
  f.zeta_dot = (phase_angle_zeta(t + h, p) - phase_angle_zeta(t - h, p)) / (2.0 * h);

  const double pulse = gaussian_pulse(t, p);
  const double omega_a = mixing_angle_rate(t, p) / 2.0;
  const double delta = detuning(t, p);
  f.omega_eff = std::sqrt(pulse * pulse / 2.0 + omega_a * omega_a);
  f.delta_eff = (delta - f.zeta_dot / 2.0) / 2.0;
  f.omega_quoted = std::sqrt(pulse * pulse + omega_a * omega_a);
  f.delta_half_gauge = (delta - f.zeta_dot) / 2.0;
  f.h_rotated << f.delta_eff, f.omega_eff, f.omega_eff, -f.delta_eff;
  return f;
}

HamiltonianSampler make_tqd_sampler(const SystemParams& p) {
  p.validate();
  return {[p](double t) -> Eigen::MatrixXcd { return tqd_hamiltonian(t, p); }, 2,
          Basis::Diabatic2};
}

}  // namespace bellsta
