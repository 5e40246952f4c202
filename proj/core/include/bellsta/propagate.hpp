#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "bellsta/params.hpp"
#include "bellsta/state.hpp"

namespace bellsta {

/// A time-dependent Hermitian Hamiltonian, sampled pointwise. `dim` is the
/// (fixed) matrix dimension and `basis` tags the space the matrix acts on.
struct HamiltonianSampler {
  std::function<Eigen::MatrixXcd(double)> sample;
  int dim = 2;
  Basis basis = Basis::Diabatic2;
};

/// Controls the automatic step-size refinement of propagate().
struct ConvergencePolicy {
  /// Converged when halving dt changes every final amplitude by less than
  /// this (max over components, complex difference).
  double tol = 1e-8;
  /// Maximum number of dt halvings before giving up with NumericalError.
  int max_refinements = 3;
};

/// States at every node of a uniform time grid, all in one basis.
class Trajectory {
 public:
  Trajectory(TimeGrid grid, Basis basis, std::vector<Eigen::VectorXcd> states);

  const TimeGrid& grid() const { return grid_; }
  Basis basis() const { return basis_; }
  int n_nodes() const { return static_cast<int>(states_.size()); }
  double time_at(int k) const { return grid_.node(k); }
  const Eigen::VectorXcd& state_at(int k) const { return states_.at(k); }
  const Eigen::VectorXcd& final_state() const { return states_.back(); }
  /// |amplitude of component `comp` at node k|^2.
  double population_at(int k, int comp) const;
  /// Final state wrapped back into a validated QuantumState.
  QuantumState final_quantum_state() const;

 private:
  TimeGrid grid_;
  Basis basis_;
  std::vector<Eigen::VectorXcd> states_;
};

/// Integrates the Schrodinger equation i d/dt |psi> = H(t) |psi> on the given
/// grid with the midpoint-exponential (second-order Magnus) rule:
///   psi_{k+1} = exp(-i H(t_k + dt/2) dt) psi_k.
/// Each step is an exact matrix exponential of a Hermitian sample, so the
/// norm is preserved to machine precision at every node. No refinement.
Trajectory propagate_fixed(const HamiltonianSampler& h, const QuantumState& psi0,
                           const TimeGrid& grid);

/// Like propagate_fixed, but halves dt (doubling n_steps) until the final
/// amplitudes change by less than policy.tol, up to policy.max_refinements
/// halvings. Returns the trajectory at the finest grid reached. Throws
/// NumericalError if the tolerance is still not met.
Trajectory propagate(const HamiltonianSampler& h, const QuantumState& psi0,
                     const TimeGrid& grid, const ConvergencePolicy& policy = {});

/// Squared overlap of each trajectory node with the instantaneous eigenstate
/// of h that is continuously connected to the initial state. Branches are
/// tracked by maximal overlap with the previous node's eigenvector, so the
/// series follows one adiabatic level through (avoided) crossings.
std::vector<double> adiabatic_overlap(const Trajectory& trajectory,
                                      const HamiltonianSampler& h);

}  // namespace bellsta
