#include "iongate/drive.hpp"

#include <cmath>

#include "iongate/errors.hpp"

namespace iongate {

namespace {

bool is_resonant(double omega_f, double omega_z) {
  return std::abs(omega_f - 2.0 * omega_z) / omega_z < 1e-6;
}

}  // namespace

double bistable_amplitude(const TrapConfig& cfg, const DrivingConfig& drive) {
  check_trap_config(cfg);
  if (drive.zeta <= 0.0) throw Error("zeta must be > 0");
  if (drive.f <= 0.0) throw Error("driving amplitude f must be > 0");
  if (!drive.resonant || !is_resonant(drive.omega_f, cfg.omega_z)) {
    throw RegimeError(
        "bistable amplitude requires the resonant drive omega_f = 2 omega_z");
  }
  const double m = cfg.species.mass;
  return std::sqrt(2.0 * drive.f * m * cfg.omega_z * cfg.omega_z /
                   (3.0 * drive.zeta));
}

DrivingConfig match_drive_to_separation(const TrapConfig& cfg, double zeta) {
  check_trap_config(cfg);
  if (zeta <= 0.0) throw Error("zeta must be > 0");
  DrivingConfig d;
  d.zeta = zeta;
  d.f = 3.0 / 8.0 * zeta * cfg.L * cfg.L /
        (cfg.species.mass * cfg.omega_z * cfg.omega_z);
  d.omega_f = 2.0 * cfg.omega_z;
  d.resonant = true;
  return d;
}

PositionShiftBound position_shift_bound(const TrapConfig& cfg,
                                        const DrivingConfig& drive,
                                        double U_direct) {
  check_trap_config(cfg);
  if (drive.f <= 0.0) throw Error("zero-drive: f must be > 0");
  if (U_direct < 0.0) throw Error("U_direct must be >= 0");
  const double stiffness =
      cfg.species.mass * cfg.omega_z * cfg.omega_z * cfg.L * cfg.L;
  PositionShiftBound b;
  b.ratio = 4.0 * U_direct / (drive.f * stiffness);
  b.f_min_percent = 4.0 * U_direct / (0.01 * stiffness);
  return b;
}

}  // namespace iongate
