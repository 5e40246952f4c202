#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "bellsta/errors.hpp"
#include "bellsta/experiments.hpp"
#include "bellsta/hamiltonian.hpp"
#include "bellsta/propagate.hpp"
#include "bellsta/state.hpp"
#include "bellsta/tqd.hpp"
#include "test_support.hpp"

using namespace bellsta;
using test_support::max_abs_diff;

namespace {

// Constant two-level coupling: analytically solvable Rabi problem.
HamiltonianSampler constant_coupling(double coupling, double detuning) {
  Eigen::Matrix2cd h;
  h << 0.5 * detuning, coupling, coupling, -0.5 * detuning;
  return {[h](double) -> Eigen::MatrixXcd { return h; }, 2, Basis::Diabatic2};
}

// Smoothly varying random Hermitian generator of a given dimension.
HamiltonianSampler random_hermitian_sampler(int dim, Basis basis, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto draw = [&] {
    Eigen::MatrixXcd m(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) m(r, c) = std::complex<double>(u(rng), u(rng));
    return Eigen::MatrixXcd((m + m.adjoint()) / 2.0);
  };
  const Eigen::MatrixXcd a = draw(), b = draw(), c = draw();
  return {[a, b, c](double t) -> Eigen::MatrixXcd {
            return a + std::cos(t) * b + std::sin(2.0 * t) * c;
          },
          dim, basis};
}

}  // namespace

TEST_CASE("resonant and detuned Rabi oscillations match the closed form") {
  const QuantumState e0 = QuantumState::basis_state(Basis::Diabatic2, 0);

  SUBCASE("resonant") {
    const double c = 0.35;
    const Trajectory traj =
        propagate_fixed(constant_coupling(c, 0.0), e0, TimeGrid{0.0, 10.0, 20000});
    double worst = 0.0;
    for (int k = 0; k <= 20000; ++k) {
      const double expected = std::pow(std::sin(c * traj.time_at(k)), 2);
      worst = std::max(worst, std::abs(traj.population_at(k, 1) - expected));
    }
    CHECK(worst < 1e-8);  // exact steps: only roundoff accumulates
  }

  SUBCASE("detuned") {
    const double c = 0.35, delta = 0.8;
    const double lambda = std::sqrt(c * c + 0.25 * delta * delta);
    const Trajectory traj =
        propagate_fixed(constant_coupling(c, delta), e0, TimeGrid{0.0, 10.0, 20000});
    double worst = 0.0;
    for (int k = 0; k <= 20000; ++k) {
      const double expected =
          (c * c / (lambda * lambda)) * std::pow(std::sin(lambda * traj.time_at(k)), 2);
      worst = std::max(worst, std::abs(traj.population_at(k, 1) - expected));
    }
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("every step preserves the norm to machine precision") {
  std::mt19937 rng(2025);
  const Basis bases[] = {Basis::Diabatic2, Basis::Diabatic3, Basis::Lab4};
  for (const Basis basis : bases) {
    const int dim = basis_dim(basis);
    const HamiltonianSampler h =
        random_hermitian_sampler(dim, basis, 7000U + static_cast<unsigned>(dim));
    const QuantumState psi0(test_support::random_state(dim, rng), basis);
    const Trajectory traj = propagate_fixed(h, psi0, TimeGrid{0.0, 10.0, 5000});
    double worst = 0.0;
    for (int k = 0; k <= 5000; ++k)
      worst = std::max(worst, std::abs(traj.state_at(k).norm() - 1.0));
    CHECK(worst < 1e-12);  // the policy bound is 1e-9; measured ~1e-15
  }
}

TEST_CASE("trajectory accessors and construction checks") {
  const Trajectory traj = propagate_fixed(
      constant_coupling(0.2, 0.0), QuantumState::basis_state(Basis::Diabatic2, 0),
      TimeGrid{1.0, 3.0, 10});
  CHECK(traj.n_nodes() == 11);
  CHECK(traj.time_at(0) == 1.0);
  CHECK(traj.time_at(10) == 3.0);
  CHECK(traj.basis() == Basis::Diabatic2);
  CHECK(traj.population_at(0, 0) == 1.0);
  CHECK(traj.final_state().size() == 2);
  CHECK_NOTHROW(traj.final_quantum_state());
  CHECK_THROWS_AS(traj.population_at(0, 2), DomainError);
  CHECK_THROWS_AS(traj.population_at(0, -1), DomainError);

  // Construction demands one state per node, each of the right dimension.
  std::vector<Eigen::VectorXcd> too_few(3, Eigen::VectorXcd::Ones(2));
  CHECK_THROWS_AS(Trajectory(TimeGrid{0.0, 1.0, 10}, Basis::Diabatic2, too_few),
                  DomainError);
  std::vector<Eigen::VectorXcd> wrong_dim(11, Eigen::VectorXcd::Ones(3));
  CHECK_THROWS_AS(Trajectory(TimeGrid{0.0, 1.0, 10}, Basis::Diabatic2, wrong_dim),
                  DomainError);
}

TEST_CASE("propagation rejects mismatched inputs") {
  const HamiltonianSampler h = constant_coupling(0.2, 0.0);
  const TimeGrid grid{0.0, 1.0, 100};
  CHECK_THROWS_AS(
      propagate_fixed(h, QuantumState::basis_state(Basis::Diabatic3, 0), grid),
      DomainError);
  HamiltonianSampler empty;
  empty.sample = nullptr;
  CHECK_THROWS_AS(
      propagate_fixed(empty, QuantumState::basis_state(Basis::Diabatic2, 0), grid),
      DomainError);
  CHECK_THROWS_AS(
      propagate_fixed(h, QuantumState::basis_state(Basis::Diabatic2, 0),
                      TimeGrid{0.0, 1.0, 1}),
      DomainError);
}

TEST_CASE("automatic refinement returns the finest grid and re-verifies") {
  SystemParams p;  // TQD defaults
  const QuantumState e0 = QuantumState::basis_state(Basis::Diabatic2, 0);
  const TimeGrid grid{0.0, 6.0, 20000};
  const Trajectory traj = propagate(make_tqd_sampler(p), e0, grid);
  // One halving suffices for the default scenario; the accepted trajectory is
  // the finer of the compared pair.
  CHECK(traj.grid().n_steps == 40000);

  // Halving the accepted step once more moves the final state by less than
  // the tolerance (the step-doubling property, re-checked from outside).
  TimeGrid doubled = grid;
  doubled.n_steps = 2 * traj.grid().n_steps;
  const Trajectory finer = propagate_fixed(make_tqd_sampler(p), e0, doubled);
  CHECK(max_abs_diff(finer.final_state(), traj.final_state()) < 1e-8);
}

TEST_CASE("refinement failure raises a numerical error") {
  SystemParams p;
  const QuantumState e0 = QuantumState::basis_state(Basis::Diabatic2, 0);
  // An unreachable tolerance exhausts the refinement budget.
  CHECK_THROWS_AS(
      propagate(make_tqd_sampler(p), e0, TimeGrid{0.0, 6.0, 50}, {1e-30, 3}),
      NumericalError);
  // A zero budget can never verify convergence.
  CHECK_THROWS_AS(propagate(make_tqd_sampler(p), e0, TimeGrid{0.0, 6.0, 20000}, {1e-8, 0}),
                  NumericalError);
}

TEST_CASE("integration is exactly time-reversible") {
  // Evolving the conjugated final state under the conjugated, time-reflected
  // generator returns the initial state: each midpoint step is the exact
  // inverse of its forward partner.
  SystemParams p;
  const HamiltonianSampler forward = make_tqd_sampler(p);
  const TimeGrid grid{0.0, 6.0, 20000};
  const QuantumState e0 = QuantumState::basis_state(Basis::Diabatic2, 0);
  const Trajectory out = propagate_fixed(forward, e0, grid);

  const double t_sum = grid.t_i + grid.t_f;
  const HamiltonianSampler backward{
      [forward, t_sum](double s) -> Eigen::MatrixXcd {
        return forward.sample(t_sum - s).conjugate();
      },
      forward.dim, forward.basis};
  const QuantumState from_end(out.final_state().conjugate(), Basis::Diabatic2);
  const Trajectory back = propagate_fixed(backward, from_end, grid);

  CHECK(max_abs_diff(back.final_state(), e0.amplitudes().conjugate()) < 1e-12);
}

TEST_CASE("slow passage follows the adiabatic branch at every node") {
  const Scenario slow = Scenario::with_defaults(Method::Adiabatic);
  const ScenarioResult result = run_scenario(slow);
  const std::vector<double> overlap =
      adiabatic_overlap(result.trajectory, make_reduced2_sampler(slow.params));
  double min_overlap = 1.0;
  for (double o : overlap) min_overlap = std::min(min_overlap, o);
  CHECK(overlap.front() > 0.999999);
  CHECK(min_overlap > 0.98);  // measured: ~0.997
  CHECK(overlap.back() > 0.999);
}

TEST_CASE("adiabatic overlap demands a matching basis") {
  const Trajectory traj = propagate_fixed(
      constant_coupling(0.2, 0.0), QuantumState::basis_state(Basis::Diabatic2, 0),
      TimeGrid{0.0, 1.0, 10});
  const HamiltonianSampler three =
      random_hermitian_sampler(3, Basis::Diabatic3, 42U);
  CHECK_THROWS_AS(adiabatic_overlap(traj, three), DomainError);
}
