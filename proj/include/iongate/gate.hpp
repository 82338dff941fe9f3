#pragma once

#include <Eigen/Dense>

namespace iongate {

/// Two-qubit collision gate in the basis (|dd>, |du>, |ud>, |uu>).
struct GateSpec {
  double t_g = 0.0;          // s, = 3 pi hbar / 4 J
  double theta = 0.0;        // rad, phase of the per-qubit R_theta correction
  double theta_combined = 0.0;  // rad, the convention folding U and J into
                                // the per-qubit phase: t_g(2E0+U+J)/2hbar
  double n_collisions = 0.0; // N_g = 3 hbar omega_z / 4 J; NaN if omega_z unset
  Eigen::Matrix4cd matrix;
};

/// Assembles the collision-gate unitary from the hyperfine splitting E0, the
/// direct shift U and the exchange coupling J_ex (all in J). omega_z, when
/// positive, fills in the collision count N_g = t_g / (pi / omega_z).
GateSpec synthesize_gate(double E0, double U, double J_ex,
                         double omega_z = 0.0);

/// The standard sqrt(SWAP) unitary.
Eigen::Matrix4cd sqrt_swap();

/// R_theta (x) R_theta with R_theta = diag(1, e^{i theta}).
Eigen::Matrix4cd phase_gate_pair(double theta);

struct SqrtSwapDecomposition {
  double global_phase = 0.0;  // rad
  double theta = 0.0;         // rad
  double residual = 0.0;      // max-norm of the reconstruction mismatch
};

/// Finds g and theta minimizing || M - e^{ig} sqrt(SWAP) (R_theta (x) R_theta) ||.
/// Throws StructureError if the residual exceeds 1e-6 (input is not a
/// collision-gate unitary).
SqrtSwapDecomposition decompose_sqrt_swap(const Eigen::Matrix4cd& matrix);

struct CollisionCount {
  double count = 0.0;       // exact, possibly non-integer
  double nearest = 0.0;     // nearest integer
  double mistuning = 0.0;   // count - nearest, fractional
};

/// Undriven: N_g = 3 hbar omega_z / 4 J with omega = omega_z.
/// Driven: N_g = 3 hbar omega_f / 8 J with omega = omega_f (= 2 omega_z at
/// resonance, where both expressions coincide).
CollisionCount collision_count(double J_ex, double omega, bool driven);

}  // namespace iongate
