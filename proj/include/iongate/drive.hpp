#pragma once

#include "iongate/trap.hpp"

namespace iongate {

/// Parametric driving of the longitudinal confinement,
/// H0(t) = p^2/2m + (1/2) m w_z^2 [1 + f cos(w_f t)] z^2 - (1/4) zeta z^4.
struct DrivingConfig {
  double f = 0.0;        // dimensionless driving amplitude
  double omega_f = 0.0;  // rad/s
  double zeta = 0.0;     // J/m^4 quartic nonlinearity
  bool resonant = false; // |omega_f - 2 omega_z| / omega_z < 1e-6
};

/// Amplitude sqrt(2 f m w_z^2 / 3 zeta) of the bistable oscillating state.
/// Throws RegimeError off resonance.
double bistable_amplitude(const TrapConfig& cfg, const DrivingConfig& drive);

/// Drive whose bistable amplitude equals L/2:
/// f = (3/8) zeta L^2 / (m w_z^2), omega_f = 2 w_z.
DrivingConfig match_drive_to_separation(const TrapConfig& cfg, double zeta);

struct PositionShiftBound {
  double ratio = 0.0;          // Delta L / L
  double f_min_percent = 0.0;  // minimum f for Delta L / L < 0.01
};

/// Collision-accumulated position-shift bound
/// Delta L / L = 4 U(L) / (f m w_z^2 L^2). Throws on f <= 0.
PositionShiftBound position_shift_bound(const TrapConfig& cfg,
                                        const DrivingConfig& drive,
                                        double U_direct);

}  // namespace iongate
