#pragma once

#include <string>
#include <vector>

#include "iongate/potential.hpp"
#include "iongate/trap.hpp"

namespace iongate {

enum class CouplingMethod { quadrature, asymptotic, classical };

const char* to_string(CouplingMethod method);

/// Time-averaged level shifts of the symmetric/antisymmetric states and the
/// derived exchange/direct couplings. All energies in J.
struct CouplingResult {
  double v_plus = 0.0;
  double v_minus = 0.0;
  double exchange_J = 0.0;      // (V+ - V-)/2
  double direct_U = 0.0;        // (V+ + V-)/2
  double interference_A = 0.0;  // dimensionless, -> 2/sqrt(pi) at long distance
  CouplingMethod method = CouplingMethod::quadrature;
  double achieved_rel_tol = 0.0;
  std::vector<std::string> warnings;
};

struct QuadratureSettings {
  double rel_tol = 1e-9;            // in (0, 1e-3]
  double abs_tol = 0.0;             // J; 0 = purely relative
  int time_nodes = 64;              // >= 16, even; starting resolution
  double spatial_truncation = 9.0;  // multiples of z0 for the exchange window
};

/// Level shifts V+- by analytic Gaussian reduction to 1D relative-coordinate
/// integrals (direct + oscillatory exchange term), adaptive quadrature in the
/// relative coordinate, and an even-node trapezoid time average over a quarter
/// period refined until the requested tolerance is met.
CouplingResult level_shifts_quadrature(const TrapConfig& cfg,
                                       const QuadratureSettings& settings = {});

struct OracleGrid {
  int spatial_nodes = 1024;  // grid intervals per axis
  int time_nodes = 64;       // trapezoid intervals over a quarter period
  double padding = 8.0;      // z window beyond +-L/2, in units of z0
};

/// Independent oracle: direct tensor-grid evaluation of the full 2D (z1, z2)
/// integrals with trapezoid time averaging, no analytic reduction. Trapezoid
/// order: drift shrinks like h^2 under grid refinement. Grids are capped at
/// 1e7 nodes (spatial_nodes^2).
CouplingResult level_shifts_bruteforce_oracle(const TrapConfig& cfg,
                                              const OracleGrid& grid = {});

/// Long-distance closed form J = (Q^2/2 pi^2 eps0)(hbar w_xy / m w_z^2) / L^3
/// with A = 2/sqrt(pi); direct_U from the renormalized-charge expression.
CouplingResult coupling_asymptotic(const TrapConfig& cfg);

/// Interference term A(L/z0, omega_perp), with the relative-momentum factor
/// period-averaged over the trap oscillation; tends to 2/sqrt(pi) in the
/// long-distance limit.
double interference_term(const TrapConfig& cfg, double rel_tol = 1e-9);

/// Raw integrand of the interference integral at relative coordinate z and
/// momentum parameter p (both reduced): (2 lambda^2/w) e^{(w-1) z^2/2}
/// erfc(sqrt(w/2) z) cos(2 p z), evaluated overflow-safe.
double interference_integrand(double lambda, double omega_perp, double z,
                              double p);

/// omega_perp * J at the alpha = 1 optimum; independent of L.
/// Returns an energy (J).
double restriction_product(const IonSpecies& species, double omega_xy);

/// Trap configuration maximizing J at fixed omega_xy by taking alpha = 1:
/// omega_z = omega_xy / omega_perp_target, L solved from the alpha = 1
/// condition.
TrapConfig design_point_alpha1(const IonSpecies& species, double omega_xy,
                               double omega_perp_target);

/// Inverse of the alpha = 1 condition: the confinement parameter implied by a
/// fixed trapping distance L.
double omega_perp_for_alpha1(const IonSpecies& species, double omega_xy,
                             double L);

/// Alternative closed form J = (hbar/2pi)^{3/2} sqrt(w_xy/m) (2/alpha) / L;
/// coincides with the asymptotic expression when alpha is substituted.
double coupling_jld2(const TrapConfig& cfg);

/// Direct interaction U = Qt^2/(4 pi eps0 L) with renormalized charge
/// Qt = Q sqrt(2/pi ln(2^{3/2} e^{gamma/2} sqrt(w) L/z0)); requires the log
/// argument > 1.
double direct_interaction_renormalized(const TrapConfig& cfg);

/// alpha << 1: ions never touch, J = 0, U from the classical renormalized
/// charge Qt = Q sqrt(2/pi ln(2 pi e^2 eps0 m w_z^2 L^3 / Q^2)).
CouplingResult classical_direct_interaction(const TrapConfig& cfg);

struct InteractionTime {
  double delta_tau = 0.0;       // s
  double validity_ratio = 0.0;  // delta_tau omega_z / 2 pi
  bool perturbative_valid = false;  // validity_ratio < 0.1
};

/// Collision interaction-time estimate for the alpha ~ 1 regime.
InteractionTime interaction_time_estimate(const TrapConfig& cfg);

}  // namespace iongate
