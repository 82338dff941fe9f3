#pragma once

#include <vector>

#include "iongate/species.hpp"

namespace iongate {

/// Trap geometry and frequencies. All SI; omega_z and omega_xy in rad/s,
/// L is the trapping distance (merged-trap half-separation scale) in m.
struct TrapConfig {
  IonSpecies species;
  double omega_z = 0.0;
  double omega_xy = 0.0;
  double L = 0.0;

  double z0() const;          // sqrt(hbar / (m omega_z)), m
  double omega_perp() const;  // omega_xy / omega_z
};

/// Throws on invariant violations (omega_xy >= omega_z > 0, L > 0, mass > 0);
/// returns soft warnings (e.g. omega_perp < 3 weakens the quasi-1D assumption).
std::vector<std::string> check_trap_config(const TrapConfig& cfg);

struct DerivedScales {
  double z0;          // m
  double omega_perp;  // dimensionless
};

DerivedScales derived_scales(const TrapConfig& cfg);

/// Oscillating coherent-state pair at the generating time t:
/// x_t = (L/2) cos(omega_z t), p_t = (m omega_z L / 2) sin(omega_z t).
struct CoherentPairState {
  double x_t;                // m
  double p_t;                // kg m/s
  double overlap_magnitude;  // |<phi|varphi>| = exp(-L^2 / 4 z0^2), t-independent
};

CoherentPairState coherent_pair_at(const TrapConfig& cfg, double t);

/// Normalization of the symmetric/antisymmetric two-ion spatial states,
/// n_pm = 1 / sqrt(2 (1 +- S^2)) with S the single-particle overlap magnitude.
struct SymmetrizationNorms {
  double n_plus;
  double n_minus;
};

/// Throws DegenerateOverlapError when 1 - S^2 < 1e-15.
SymmetrizationNorms symmetrization_norms(const TrapConfig& cfg);

}  // namespace iongate
