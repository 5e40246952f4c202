#include "bellsta/propagate.hpp"

#include <cmath>
#include <complex>

#include "bellsta/errors.hpp"

namespace bellsta {
namespace {

using std::complex;
const complex<double> kI(0.0, 1.0);

// Exact exp(-i H dt) psi for Hermitian 2x2 H: with c = tr(H)/2 and
// H - cI = [[a, b], [b*, -a]], (H - cI)^2 = (a^2 + |b|^2) I, so the
// exponential reduces to a cosine/sine pair.
Eigen::Vector2cd step2(const Eigen::Matrix2cd& h, double dt,
                       const Eigen::Vector2cd& psi) {
  const double c = 0.5 * (h(0, 0).real() + h(1, 1).real());
  const double a = h(0, 0).real() - c;
  const complex<double> b = h(0, 1);
  const double lambda = std::sqrt(a * a + std::norm(b));
  const double x = lambda * dt;
  const double cos_x = std::cos(x);
  const double sinc = lambda == 0.0 ? dt : std::sin(x) / lambda;
  const complex<double> phase = std::exp(-kI * c * dt);
  Eigen::Vector2cd out;
  out[0] = phase * (cos_x * psi[0] - kI * sinc * (a * psi[0] + b * psi[1]));
  out[1] = phase * (cos_x * psi[1] - kI * sinc * (std::conj(b) * psi[0] - a * psi[1]));
  return out;
}

// Exact exp(-i H dt) psi via eigendecomposition, for any Hermitian dimension.
Eigen::VectorXcd step_eig(const Eigen::MatrixXcd& h, double dt,
                          const Eigen::VectorXcd& psi) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success)
    throw NumericalError("propagate: eigendecomposition of a Hamiltonian sample failed");
  Eigen::VectorXcd coeffs = es.eigenvectors().adjoint() * psi;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    coeffs[k] *= std::exp(-kI * es.eigenvalues()[k] * dt);
  return es.eigenvectors() * coeffs;
}

}  // namespace

Trajectory::Trajectory(TimeGrid grid, Basis basis, std::vector<Eigen::VectorXcd> states)
    : grid_(grid), basis_(basis), states_(std::move(states)) {
  grid_.validate();
  if (static_cast<int>(states_.size()) != grid_.n_nodes())
    throw DomainError("trajectory needs one state per grid node");
  const int dim = basis_dim(basis_);
  for (const auto& s : states_)
    if (s.size() != dim) throw DomainError("trajectory state dimension mismatch");
}

double Trajectory::population_at(int k, int comp) const {
  const auto& s = states_.at(static_cast<std::size_t>(k));
  if (comp < 0 || comp >= s.size())
    throw DomainError("trajectory population component out of range");
  return std::norm(s[comp]);
}

QuantumState Trajectory::final_quantum_state() const {
  return QuantumState(states_.back(), basis_);
}

Trajectory propagate_fixed(const HamiltonianSampler& h, const QuantumState& psi0,
                           const TimeGrid& grid) {
  grid.validate();
  if (!h.sample) throw DomainError("propagate: sampler has no function");
  if (psi0.basis() != h.basis || psi0.dim() != h.dim)
    throw DomainError("propagate: initial state basis does not match the sampler");

  const double dt = grid.dt();
  std::vector<Eigen::VectorXcd> states;
  states.reserve(static_cast<std::size_t>(grid.n_nodes()));
  states.push_back(psi0.amplitudes());
  if (h.dim == 2) {
    Eigen::Vector2cd psi = psi0.amplitudes();
    for (int k = 0; k < grid.n_steps; ++k) {
      const double t_mid = grid.node(k) + 0.5 * dt;
      psi = step2(h.sample(t_mid), dt, psi);
      states.emplace_back(psi);
    }
  } else {
    Eigen::VectorXcd psi = psi0.amplitudes();
    for (int k = 0; k < grid.n_steps; ++k) {
      const double t_mid = grid.node(k) + 0.5 * dt;
      psi = step_eig(h.sample(t_mid), dt, psi);
      states.push_back(psi);
    }
  }
  return Trajectory(grid, h.basis, std::move(states));
}

Trajectory propagate(const HamiltonianSampler& h, const QuantumState& psi0,
                     const TimeGrid& grid, const ConvergencePolicy& policy) {
  Trajectory current = propagate_fixed(h, psi0, grid);
  for (int refinement = 1; refinement <= policy.max_refinements; ++refinement) {
    TimeGrid finer = grid;
    finer.n_steps = grid.n_steps << refinement;
    Trajectory next = propagate_fixed(h, psi0, finer);
    const double diff =
        (next.final_state() - current.final_state()).cwiseAbs().maxCoeff();
    current = std::move(next);
    if (diff < policy.tol) return current;
  }
  throw NumericalError("propagate: final state did not converge to tolerance "
                       "within the refinement budget");
}

std::vector<double> adiabatic_overlap(const Trajectory& trajectory,
                                      const HamiltonianSampler& h) {
  if (!h.sample) throw DomainError("adiabatic_overlap: sampler has no function");
  if (trajectory.basis() != h.basis)
    throw DomainError("adiabatic_overlap: trajectory basis does not match the sampler");

  std::vector<double> overlap;
  overlap.reserve(static_cast<std::size_t>(trajectory.n_nodes()));
  Eigen::VectorXcd previous = trajectory.state_at(0);
  for (int k = 0; k < trajectory.n_nodes(); ++k) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.sample(trajectory.time_at(k)));
    if (es.info() != Eigen::Success)
      throw NumericalError("adiabatic_overlap: eigendecomposition failed");
    // Track the adiabatic branch: the eigenvector closest to the previous one.
    int best = 0;
    double best_overlap = -1.0;
    for (int j = 0; j < h.dim; ++j) {
      const double o = std::norm(es.eigenvectors().col(j).dot(previous));
      if (o > best_overlap) {
        best_overlap = o;
        best = j;
      }
    }
    previous = es.eigenvectors().col(best);
    overlap.push_back(std::norm(previous.dot(trajectory.state_at(k))));
  }
  return overlap;
}

}  // namespace bellsta
