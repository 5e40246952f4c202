#include "bellsta/hamiltonian.hpp"

#include <cmath>
#include <complex>

#include "bellsta/errors.hpp"

namespace bellsta {
namespace {

using std::complex;
const complex<double> kI(0.0, 1.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Kronecker product of two 2x2 matrices on the product basis
// { |up,up>, |up,down>, |down,up>, |down,down> } with up = index 0.
Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

// Change of basis from the product basis to { |up,up>, |psi+>, |down,down>,
// |psi-> }; columns are the new basis vectors.
const Eigen::Matrix4cd& bell_basis() {
  static const Eigen::Matrix4cd w = [] {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = kInvSqrt2;
    m(2, 1) = kInvSqrt2;
    m(3, 2) = 1.0;
    m(1, 3) = kInvSqrt2;
    m(2, 3) = -kInvSqrt2;
    return m;
  }();
  return w;
}

}  // namespace

Eigen::Matrix2cd spin_x() {
  Eigen::Matrix2cd s;
  s << 0.0, 0.5, 0.5, 0.0;
  return s;
}

Eigen::Matrix2cd spin_y() {
  Eigen::Matrix2cd s;
  s << 0.0, 0.5 * kI, -0.5 * kI, 0.0;
  return s;
}

Eigen::Matrix2cd spin_z() {
  Eigen::Matrix2cd s;
  s << -0.5, 0.0, 0.0, 0.5;
  return s;
}

double gaussian_pulse(double t, const SystemParams& p) {
  const double dt = t - crossing_times(p).t12;
  return p.omega0 * std::exp(-dt * dt / (p.t_width * p.t_width));
}

double gaussian_pulse_dot(double t, const SystemParams& p) {
  const double dt = t - crossing_times(p).t12;
  return gaussian_pulse(t, p) * (-2.0 * dt / (p.t_width * p.t_width));
}

double sweep_bz(double t, const SystemParams& p) { return p.alpha * p.alpha * t; }

double detuning(double t, const SystemParams& p) {
  return p.omega + 2.0 * p.xi - sweep_bz(t, p);
}

Eigen::Matrix4cd lab_hamiltonian4(double t, const SystemParams& p) {
  const double pulse = gaussian_pulse(t, p);
  const double bx = pulse * std::cos(p.omega * t);
  const double by = pulse * std::sin(p.omega * t);
  const double bz = sweep_bz(t, p);

  const Eigen::Matrix2cd sx = spin_x(), sy = spin_y(), sz = spin_z();
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  Eigen::Matrix4cd h = 4.0 * p.xi * kron2(sz, sz);
  h += bx * (kron2(sx, id) + kron2(id, sx));
  h += by * (kron2(sy, id) + kron2(id, sy));
  h += bz * (kron2(sz, id) + kron2(id, sz));
  return bell_basis().adjoint() * h * bell_basis();
}

Eigen::Matrix4cd rotating_frame_map(double t, const SystemParams& p) {
  Eigen::Matrix4cd v = Eigen::Matrix4cd::Zero();
  v(0, 0) = std::exp(-kI * p.omega * t);
  v(1, 1) = 1.0;
  v(2, 2) = std::exp(kI * p.omega * t);
  v(3, 3) = 1.0;
  return v;
}

Eigen::Matrix4cd rotating_frame_map_dot(double t, const SystemParams& p) {
  Eigen::Matrix4cd v = Eigen::Matrix4cd::Zero();
  v(0, 0) = -kI * p.omega * std::exp(-kI * p.omega * t);
  v(2, 2) = kI * p.omega * std::exp(kI * p.omega * t);
  return v;
}

Eigen::Matrix3cd interaction_hamiltonian3(double t, const SystemParams& p) {
  const double c = gaussian_pulse(t, p) * kInvSqrt2;
  const double bz = sweep_bz(t, p);
  Eigen::Matrix3cd h;
  h << p.omega - bz, c, 0.0,
       c, -2.0 * p.xi, c,
       0.0, c, bz - p.omega;
  return h;
}

Eigen::Matrix2cd reduced_hamiltonian2(double t, const SystemParams& p) {
  const double c = gaussian_pulse(t, p) * kInvSqrt2;
  const double half_delta = 0.5 * detuning(t, p);
  Eigen::Matrix2cd h;
  h << half_delta, c, c, -half_delta;
  return h;
}

QuantumState lab_to_interaction(const QuantumState& lab_state, double t,
                                const SystemParams& p) {
  if (lab_state.basis() != Basis::Lab4)
    throw DomainError("lab_to_interaction expects a Lab4 state");
  // The rotating frame absorbs a uniform energy shift of -xi on the triplet;
  // the matching phase keeps the map consistent with propagation in both
  // frames, not just with populations.
  const Eigen::Vector4cd rotated = std::exp(kI * p.xi * t) *
                                   (rotating_frame_map(t, p) * lab_state.amplitudes());
  if (std::norm(rotated[3]) > 1e-9)
    throw DomainError("lab_to_interaction: singlet amplitude is not negligible");
  return QuantumState(rotated.head<3>(), Basis::Diabatic3);
}

QuantumState interaction_to_lab(const QuantumState& interaction_state, double t,
                                const SystemParams& p) {
  if (interaction_state.basis() != Basis::Diabatic3)
    throw DomainError("interaction_to_lab expects a Diabatic3 state");
  Eigen::Vector4cd embedded = Eigen::Vector4cd::Zero();
  embedded.head<3>() = interaction_state.amplitudes();
  const Eigen::Vector4cd lab = rotating_frame_map(t, p).adjoint() *
                               (std::exp(-kI * p.xi * t) * embedded);
  return QuantumState(lab, Basis::Lab4);
}

HamiltonianSampler make_lab4_sampler(const SystemParams& p) {
  p.validate();
  return {[p](double t) -> Eigen::MatrixXcd { return lab_hamiltonian4(t, p); }, 4,
          Basis::Lab4};
}

HamiltonianSampler make_interaction3_sampler(const SystemParams& p) {
  p.validate();
  return {[p](double t) -> Eigen::MatrixXcd { return interaction_hamiltonian3(t, p); },
          3, Basis::Diabatic3};
}

HamiltonianSampler make_reduced2_sampler(const SystemParams& p) {
  p.validate();
  return {[p](double t) -> Eigen::MatrixXcd { return reduced_hamiltonian2(t, p); }, 2,
          Basis::Diabatic2};
}

}  // namespace bellsta
