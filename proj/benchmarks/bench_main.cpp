#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "bellsta/experiments.hpp"
#include "bellsta/hamiltonian.hpp"
#include "bellsta/lri.hpp"
#include "bellsta/params.hpp"
#include "bellsta/propagate.hpp"
#include "bellsta/state.hpp"
#include "bellsta/tqd.hpp"

using namespace bellsta;

namespace {

// Raw stepping throughput of the integrator for each frame dimension. The
// 2x2 path uses the closed-form exponential; 3x3 and 4x4 go through the
// Hermitian eigensolver.
void run_stepping(benchmark::State& state, const HamiltonianSampler& h,
                  const QuantumState& psi0) {
  const TimeGrid grid{0.0, 6.0, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    Trajectory traj = propagate_fixed(h, psi0, grid);
    benchmark::DoNotOptimize(traj);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_StepReduced2(benchmark::State& state) {
  const SystemParams p;
  run_stepping(state, make_reduced2_sampler(p),
               QuantumState::basis_state(Basis::Diabatic2, 0));
}
BENCHMARK(BM_StepReduced2)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_StepInteraction3(benchmark::State& state) {
  const SystemParams p;
  run_stepping(state, make_interaction3_sampler(p),
               QuantumState::basis_state(Basis::Diabatic3, 0));
}
BENCHMARK(BM_StepInteraction3)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_StepLab4(benchmark::State& state) {
  const SystemParams p;
  run_stepping(state, make_lab4_sampler(p),
               QuantumState::basis_state(Basis::Lab4, 0));
}
BENCHMARK(BM_StepLab4)->Arg(20000)->Unit(benchmark::kMillisecond);

// Per-sample cost of the counterdiabatic Hamiltonian (pulse, derivative,
// mixing-angle rate) across the window.
void BM_TqdSample(benchmark::State& state) {
  const SystemParams p;
  const HamiltonianSampler h = make_tqd_sampler(p);
  double t = 0.0;
  for (auto _ : state) {
    Eigen::MatrixXcd m = h.sample(t);
    benchmark::DoNotOptimize(m);
    t += 1e-3;
    if (t > 6.0) t = 0.0;
  }
}
BENCHMARK(BM_TqdSample);

// Designed-protocol building blocks: the polynomial solve (general placement
// exercises both linear systems) and the field inversion at one instant.
void BM_SolveAnsatz(benchmark::State& state) {
  for (auto _ : state) {
    AnsatzCoeffs c = solve_ansatz(0.0, 6.0, 2.4);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_SolveAnsatz);

void BM_InvertFields(benchmark::State& state) {
  const AnsatzCoeffs c = solve_ansatz(0.0, 6.0, 3.0);
  double t = 0.5;
  for (auto _ : state) {
    LriFields f = invert_fields(t, c);
    benchmark::DoNotOptimize(f);
    t += 1e-3;
    if (t > 5.5) t = 0.5;
  }
}
BENCHMARK(BM_InvertFields);

void BM_DesignReport(benchmark::State& state) {
  for (auto _ : state) {
    DesignReport report = lri_design_report(0.0, 6.0, 3.0, 1000);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_DesignReport)->Unit(benchmark::kMillisecond);

// The three default scenarios end to end, including automatic refinement.
void run_scenario_bench(benchmark::State& state, Method method) {
  const Scenario s = Scenario::with_defaults(method);
  for (auto _ : state) {
    ScenarioResult r = run_scenario(s);
    benchmark::DoNotOptimize(r.fidelity);
  }
}

void BM_ScenarioAdiabatic(benchmark::State& state) {
  run_scenario_bench(state, Method::Adiabatic);
}
BENCHMARK(BM_ScenarioAdiabatic)->Unit(benchmark::kMillisecond);

void BM_ScenarioTqd(benchmark::State& state) {
  run_scenario_bench(state, Method::Tqd);
}
BENCHMARK(BM_ScenarioTqd)->Unit(benchmark::kMillisecond);

void BM_ScenarioLri(benchmark::State& state) {
  run_scenario_bench(state, Method::Lri);
}
BENCHMARK(BM_ScenarioLri)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
