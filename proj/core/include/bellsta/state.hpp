#pragma once

#include <Eigen/Dense>
#include <string>

namespace bellsta {

/// Basis in which a state vector's amplitudes are expressed.
///
/// Lab4: the full two-spin space in the ordered basis
///   { |up,up>, |psi+> = (|up,down>+|down,up>)/sqrt(2), |down,down>,
///     |psi-> = (|up,down>-|down,up>)/sqrt(2) }.
/// Diabatic3: the symmetric (triplet) subspace after the rotating-frame
///   transformation, i.e. the first three Lab4 states; the singlet |psi->
///   decouples from the symmetric drive.
/// Diabatic2: the two levels involved in the target crossing,
///   { |up,up>, |psi+> }.
enum class Basis { Diabatic2, Diabatic3, Lab4 };

/// Dimension of the state space for a basis tag (2, 3 or 4).
int basis_dim(Basis basis);

/// Human-readable name ("diabatic2", "diabatic3", "lab4").
std::string basis_name(Basis basis);

/// A pure state: normalized amplitudes tagged with their basis.
class QuantumState {
 public:
  /// Validates the dimension against the basis tag and requires
  /// | ||amps||^2 - 1 | <= 1e-9 (DomainError otherwise).
  QuantumState(Eigen::VectorXcd amplitudes, Basis basis);

  /// The index-th canonical basis vector.
  static QuantumState basis_state(Basis basis, int index);

  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Basis basis() const { return basis_; }
  int dim() const { return static_cast<int>(amps_.size()); }

  /// |amps[k]|^2.
  double population(int k) const;

 private:
  Eigen::VectorXcd amps_;
  Basis basis_;
};

/// Squared overlap |<a|b>|^2. Both states must share the same basis
/// (DomainError otherwise). Symmetric in its arguments.
double fidelity(const QuantumState& a, const QuantumState& b);

}  // namespace bellsta
