#pragma once

#include "iongate/trap.hpp"

namespace iongate {

/// Parameters of the quasi-1D effective Coulomb interaction.
struct EffectivePotentialParams {
  double coulomb_prefactor;  // Q^2 / (4 pi eps0 z0), J
  double omega_perp;         // dimensionless
  double z0;                 // m
};

EffectivePotentialParams effective_potential_params(const TrapConfig& cfg);

/// V_eff(r_z) = (Q^2/4 pi eps0 z0) sqrt(pi w/2) erfcx(sqrt(w/2) r_z/z0).
/// Evaluated through erfcx so no intermediate overflows; strictly positive,
/// strictly decreasing in r_z, finite up to r_z ~ 1e6 z0 and beyond.
double v_eff(const EffectivePotentialParams& params, double r_z);

/// V_eff(0) = (Q^2/4 pi eps0 z0) sqrt(pi w/2), the collision barrier.
double v_eff_barrier(const EffectivePotentialParams& params);

/// Small-r_z linearization V_eff(0) (1 - sqrt(2 w/pi) r_z/z0), valid for
/// r_z < z0 sqrt(2/w).
double v_eff_linearized(const EffectivePotentialParams& params, double r_z);

/// Barrier parameter alpha = (m omega_z^2 L^2 / 4) / V_eff(0).
double alpha(const TrapConfig& cfg);

enum class CollisionRegime { colliding, marginal, classical_blocked };

/// alpha > 1: colliding; alpha < 0.1: classical-blocked; in between: marginal.
CollisionRegime collision_regime(double alpha_value);

const char* to_string(CollisionRegime regime);

namespace reduced {

/// Dimensionless frame: lengths in z0, energies in hbar*omega_z, times in
/// 1/omega_z. q is the Coulomb strength Q^2/(4 pi eps0 z0 hbar omega_z).
struct Frame {
  double z0;           // m
  double energy;       // J (= hbar omega_z)
  double time;         // s (= 1/omega_z)
  double lambda;       // L / z0
  double omega_perp;
  double q;
};

Frame make_frame(const TrapConfig& cfg);

/// Reduced effective potential q sqrt(pi w/2) erfcx(sqrt(w/2) |r|).
double v_eff(double q, double omega_perp, double r);

}  // namespace reduced

}  // namespace iongate
