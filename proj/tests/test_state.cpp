#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "bellsta/errors.hpp"
#include "bellsta/state.hpp"
#include "test_support.hpp"

using namespace bellsta;
using namespace std::complex_literals;

TEST_CASE("basis dimensions and names") {
  CHECK(basis_dim(Basis::Diabatic2) == 2);
  CHECK(basis_dim(Basis::Diabatic3) == 3);
  CHECK(basis_dim(Basis::Lab4) == 4);
  CHECK(basis_name(Basis::Diabatic2) == "diabatic2");
  CHECK(basis_name(Basis::Diabatic3) == "diabatic3");
  CHECK(basis_name(Basis::Lab4) == "lab4");
}

TEST_CASE("basis states are unit vectors with a single nonzero entry") {
  for (Basis basis : {Basis::Diabatic2, Basis::Diabatic3, Basis::Lab4}) {
    const int dim = basis_dim(basis);
    for (int k = 0; k < dim; ++k) {
      const QuantumState s = QuantumState::basis_state(basis, k);
      CHECK(s.basis() == basis);
      CHECK(s.amplitudes().size() == dim);
      CHECK(s.population(k) == 1.0);
      for (int j = 0; j < dim; ++j) {
        if (j != k) CHECK(s.population(j) == 0.0);
      }
    }
    CHECK_THROWS_AS(QuantumState::basis_state(basis, dim), DomainError);
    CHECK_THROWS_AS(QuantumState::basis_state(basis, -1), DomainError);
  }
}

TEST_CASE("construction enforces dimension and normalization") {
  Eigen::VectorXcd bad3(3);
  bad3 << 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(QuantumState(bad3, Basis::Diabatic2), DomainError);

  Eigen::VectorXcd unnormalized(2);
  unnormalized << 0.5, 0.5;
  CHECK_THROWS_AS(QuantumState(unnormalized, Basis::Diabatic2), DomainError);

  // Norm within the documented 1e-9 slack is accepted.
  Eigen::VectorXcd nearly(2);
  nearly << std::sqrt(0.5) * (1.0 + 2e-10), std::sqrt(0.5);
  CHECK_NOTHROW(QuantumState(nearly, Basis::Diabatic2));
}

TEST_CASE("fidelity: bounds, symmetry, invariance under global phase") {
  std::mt19937 rng(314159);
  for (Basis basis : {Basis::Diabatic2, Basis::Diabatic3, Basis::Lab4}) {
    const int dim = basis_dim(basis);
    for (int trial = 0; trial < 200; ++trial) {
      const QuantumState a(test_support::random_state(dim, rng), basis);
      const QuantumState b(test_support::random_state(dim, rng), basis);
      const double f = fidelity(a, b);
      CHECK(f >= 0.0);
      CHECK(f <= 1.0);
      CHECK(fidelity(b, a) == doctest::Approx(f).epsilon(1e-14));
      CHECK(fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-12));

      const double phase = std::uniform_real_distribution<double>(0.0, 6.28)(rng);
      const QuantumState rotated(
          Eigen::VectorXcd(std::exp(1i * phase) * a.amplitudes()), basis);
      CHECK(fidelity(rotated, b) == doctest::Approx(f).epsilon(1e-12));
    }
  }
}

TEST_CASE("fidelity of orthogonal basis states is zero") {
  const QuantumState e0 = QuantumState::basis_state(Basis::Diabatic3, 0);
  const QuantumState e1 = QuantumState::basis_state(Basis::Diabatic3, 1);
  CHECK(fidelity(e0, e1) == 0.0);
}

TEST_CASE("fidelity rejects mixed bases") {
  const QuantumState two = QuantumState::basis_state(Basis::Diabatic2, 0);
  const QuantumState three = QuantumState::basis_state(Basis::Diabatic3, 0);
  CHECK_THROWS_AS(fidelity(two, three), DomainError);
}

TEST_CASE("populations sum to one") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 100; ++trial) {
    const QuantumState s(test_support::random_state(4, rng), Basis::Lab4);
    double total = 0.0;
    for (int k = 0; k < 4; ++k) total += s.population(k);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}
