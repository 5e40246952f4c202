#pragma once

#include <Eigen/Dense>

#include "bellsta/params.hpp"
#include "bellsta/propagate.hpp"
#include "bellsta/state.hpp"

namespace bellsta {

// Spin-1/2 operators, in the convention used throughout this library:
//   Sx = sigma_x / 2,  Sy = -sigma_y / 2,  Sz = -sigma_z / 2,
// which satisfies [Sx, Sy] = i Sz cyclically and makes the rotating drive
// couple |up,up> -> |psi+> with phase exp(-i omega t).
Eigen::Matrix2cd spin_x();
Eigen::Matrix2cd spin_y();
Eigen::Matrix2cd spin_z();

/// Gaussian pulse envelope Omega(t) = omega0 * exp(-(t - t12)^2 / T^2),
/// centered on the crossing of the two target levels.
double gaussian_pulse(double t, const SystemParams& p);

/// Time derivative of gaussian_pulse.
double gaussian_pulse_dot(double t, const SystemParams& p);

/// Longitudinal sweep bz(t) = alpha^2 * t.
double sweep_bz(double t, const SystemParams& p);

/// Two-level detuning Delta(t) = omega + 2*xi - alpha^2 * t; zero at t12.
double detuning(double t, const SystemParams& p);

/// Full lab-frame Hamiltonian in the Lab4 basis:
///   H = 4*xi*SAz*SBz + B(t) . (SA + SB)
/// with B(t) = (Omega cos(omega t), Omega sin(omega t), bz(t)).
Eigen::Matrix4cd lab_hamiltonian4(double t, const SystemParams& p);

/// Diagonal rotating-frame map V(t) = diag(e^{-i omega t}, 1, e^{+i omega t}, 1).
/// Transforming with it, V H V^+ + i dV/dt V^+, makes the triplet block time-
/// independent up to the slow envelope and sweep: it equals
/// interaction_hamiltonian3 plus a uniform shift of +xi (the singlet sits at
/// -xi and stays decoupled).
Eigen::Matrix4cd rotating_frame_map(double t, const SystemParams& p);

/// Analytic dV/dt of rotating_frame_map.
Eigen::Matrix4cd rotating_frame_map_dot(double t, const SystemParams& p);

/// Rotating-frame Hamiltonian on the triplet (Diabatic3) subspace:
///   [ omega - bz        Omega/sqrt(2)   0            ]
///   [ Omega/sqrt(2)     -2*xi           Omega/sqrt(2) ]
///   [ 0                 Omega/sqrt(2)   bz - omega   ]
Eigen::Matrix3cd interaction_hamiltonian3(double t, const SystemParams& p);

/// Two-level reduction to the { |up,up>, |psi+> } crossing:
///   [ Delta/2          Omega/sqrt(2) ]
///   [ Omega/sqrt(2)    -Delta/2      ]
/// Valid while the third level is far detuned (pulse negligible at t13, t23).
Eigen::Matrix2cd reduced_hamiltonian2(double t, const SystemParams& p);

/// Maps a Lab4 state into the rotating frame and restricts it to the triplet
/// subspace. The dropped singlet amplitude must be negligible (its squared
/// magnitude <= 1e-9), otherwise DomainError.
QuantumState lab_to_interaction(const QuantumState& lab_state, double t,
                                const SystemParams& p);

/// Inverse of lab_to_interaction: embeds a Diabatic3 state with zero singlet
/// amplitude and rotates back to the lab frame.
QuantumState interaction_to_lab(const QuantumState& interaction_state, double t,
                                const SystemParams& p);

/// Samplers for the three exact frames. Validates p once up front.
HamiltonianSampler make_lab4_sampler(const SystemParams& p);
HamiltonianSampler make_interaction3_sampler(const SystemParams& p);
HamiltonianSampler make_reduced2_sampler(const SystemParams& p);

}  // namespace bellsta
