#include "bellsta/state.hpp"
#include <algorithm>

#include <cmath>

#include "bellsta/errors.hpp"

namespace bellsta {

int basis_dim(Basis basis) {
  switch (basis) {
    case Basis::Diabatic2: return 2;
    case Basis::Diabatic3: return 3;
    case Basis::Lab4: return 4;
  }
  throw DomainError("unknown basis tag");
}

std::string basis_name(Basis basis) {
  switch (basis) {
    case Basis::Diabatic2: return "diabatic2";
    case Basis::Diabatic3: return "diabatic3";
    case Basis::Lab4: return "lab4";
  }
  throw DomainError("unknown basis tag");
}

QuantumState::QuantumState(Eigen::VectorXcd amplitudes, Basis basis)
    : amps_(std::move(amplitudes)), basis_(basis) {
  if (amps_.size() != basis_dim(basis_))
    throw DomainError("state dimension does not match basis " + basis_name(basis_));
  const double norm2 = amps_.squaredNorm();
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > 1e-9)
    throw DomainError("state is not normalized (|norm^2 - 1| > 1e-9)");
}

QuantumState QuantumState::basis_state(Basis basis, int index) {
  const int dim = basis_dim(basis);
  if (index < 0 || index >= dim)
    throw DomainError("basis state index out of range");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  amps[index] = 1.0;
  return QuantumState(std::move(amps), basis);
}

double QuantumState::population(int k) const {
  if (k < 0 || k >= dim()) throw DomainError("population index out of range");
  return std::norm(amps_[k]);
}

double fidelity(const QuantumState& a, const QuantumState& b) {
  if (a.basis() != b.basis())
    throw DomainError("fidelity requires both states in the same basis");
  // Clamp: the exact value is <= 1, but norms carry ~1e-15 of roundoff.
  return std::min(1.0, std::norm(a.amplitudes().dot(b.amplitudes())));
}

}  // namespace bellsta
