#include "iongate/potential.hpp"

#include <cmath>

#include "iongate/constants.hpp"
#include "iongate/erfcx.hpp"
#include "iongate/errors.hpp"

namespace iongate {

EffectivePotentialParams effective_potential_params(const TrapConfig& cfg) {
  check_trap_config(cfg);
  const double z0 = cfg.z0();
  const double q2 = cfg.species.charge * cfg.species.charge;
  const double pref =
      q2 / (4.0 * constants::pi * constants::vacuum_permittivity * z0);
  return {pref, cfg.omega_perp(), z0};
}

double v_eff(const EffectivePotentialParams& params, double r_z) {
  if (r_z < 0.0) throw Error("r_z must be >= 0");
  const double w = params.omega_perp;
  const double x = std::sqrt(w / 2.0) * r_z / params.z0;
  return params.coulomb_prefactor * std::sqrt(constants::pi * w / 2.0) *
         erfcx(x);
}

double v_eff_barrier(const EffectivePotentialParams& params) {
  return params.coulomb_prefactor *
         std::sqrt(constants::pi * params.omega_perp / 2.0);
}

double v_eff_linearized(const EffectivePotentialParams& params, double r_z) {
  const double w = params.omega_perp;
  return v_eff_barrier(params) *
         (1.0 - std::sqrt(2.0 * w / constants::pi) * r_z / params.z0);
}

double alpha(const TrapConfig& cfg) {
  const auto params = effective_potential_params(cfg);
  const double kinetic =
      0.25 * cfg.species.mass * cfg.omega_z * cfg.omega_z * cfg.L * cfg.L;
  return kinetic / v_eff_barrier(params);
}

CollisionRegime collision_regime(double alpha_value) {
  if (alpha_value > 1.0) return CollisionRegime::colliding;
  if (alpha_value < 0.1) return CollisionRegime::classical_blocked;
  return CollisionRegime::marginal;
}

const char* to_string(CollisionRegime regime) {
  switch (regime) {
    case CollisionRegime::colliding: return "colliding";
    case CollisionRegime::marginal: return "marginal";
    case CollisionRegime::classical_blocked: return "classical-blocked";
  }
  return "?";
}

namespace reduced {

Frame make_frame(const TrapConfig& cfg) {
  check_trap_config(cfg);
  Frame fr;
  fr.z0 = cfg.z0();
  fr.energy = constants::hbar * cfg.omega_z;
  fr.time = 1.0 / cfg.omega_z;
  fr.lambda = cfg.L / fr.z0;
  fr.omega_perp = cfg.omega_perp();
  const double q2 = cfg.species.charge * cfg.species.charge;
  fr.q = q2 / (4.0 * constants::pi * constants::vacuum_permittivity * fr.z0 *
               fr.energy);
  return fr;
}

double v_eff(double q, double omega_perp, double r) {
  return q * std::sqrt(constants::pi * omega_perp / 2.0) *
         erfcx(std::sqrt(omega_perp / 2.0) * std::abs(r));
}

}  // namespace reduced

}  // namespace iongate
