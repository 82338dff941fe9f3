#include "iongate/trap.hpp"

#include <cmath>

#include "iongate/constants.hpp"
#include "iongate/errors.hpp"

namespace iongate {

double TrapConfig::z0() const {
  return std::sqrt(constants::hbar / (species.mass * omega_z));
}

double TrapConfig::omega_perp() const { return omega_xy / omega_z; }

std::vector<std::string> check_trap_config(const TrapConfig& cfg) {
  if (cfg.species.mass <= 0.0) throw Error("species mass must be > 0");
  if (cfg.species.charge == 0.0) throw Error("species charge must be nonzero");
  if (cfg.omega_z <= 0.0) throw Error("omega_z must be > 0");
  if (cfg.omega_xy < cfg.omega_z) throw Error("omega_xy must be >= omega_z");
  if (cfg.L <= 0.0) throw Error("L must be > 0");
  std::vector<std::string> warnings;
  if (cfg.omega_perp() < 3.0) {
    warnings.push_back(
        "omega_perp < 3: quasi-1D assumption (omega_perp >> 1) is weak");
  }
  return warnings;
}

DerivedScales derived_scales(const TrapConfig& cfg) {
  check_trap_config(cfg);
  return {cfg.z0(), cfg.omega_perp()};
}

CoherentPairState coherent_pair_at(const TrapConfig& cfg, double t) {
  check_trap_config(cfg);
  if (t < 0.0) throw Error("t must be >= 0");
  const double half_L = 0.5 * cfg.L;
  const double x_t = half_L * std::cos(cfg.omega_z * t);
  const double p_t =
      cfg.species.mass * cfg.omega_z * half_L * std::sin(cfg.omega_z * t);
  const double lam = cfg.L / cfg.z0();
  return {x_t, p_t, std::exp(-lam * lam / 4.0)};
}

SymmetrizationNorms symmetrization_norms(const TrapConfig& cfg) {
  check_trap_config(cfg);
  const double lam = cfg.L / cfg.z0();
  // S^2 = |<phi|varphi>|^2 = exp(-L^2 / 2 z0^2)
  const double s2 = std::exp(-lam * lam / 2.0);
  if (1.0 - s2 < 1e-15) {
    throw DegenerateOverlapError(
        "coherent states indistinguishable in position (1 - S^2 < 1e-15); "
        "antisymmetric state is ill-normalized");
  }
  return {1.0 / std::sqrt(2.0 * (1.0 + s2)), 1.0 / std::sqrt(2.0 * (1.0 - s2))};
}

}  // namespace iongate
