#include "iongate/gate.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "iongate/constants.hpp"
#include "iongate/errors.hpp"

namespace iongate {

namespace {

using std::complex;
const complex<double> I{0.0, 1.0};

double wrap_2pi(double phase) {
  const double tp = constants::two_pi;
  double r = std::fmod(phase, tp);
  if (r < 0.0) r += tp;
  return r;
}

}  // namespace

GateSpec synthesize_gate(double E0, double U, double J_ex, double omega_z) {
  if (J_ex <= 0.0) throw Error("zero-coupling: J_ex must be > 0");
  using constants::hbar;
  using constants::pi;

  GateSpec gate;
  gate.t_g = 3.0 * pi * hbar / (4.0 * J_ex);
  const double tg_over_hbar = gate.t_g / hbar;
  gate.theta = wrap_2pi(E0 * tg_over_hbar);
  gate.theta_combined = wrap_2pi(0.5 * tg_over_hbar * (2.0 * E0 + U + J_ex));
  gate.n_collisions = omega_z > 0.0
                          ? gate.t_g / (pi / omega_z)
                          : std::numeric_limits<double>::quiet_NaN();

  const complex<double> prefactor =
      std::exp(I * ((E0 + U + J_ex) * tg_over_hbar));
  const complex<double> hp = 0.5 * (1.0 + I), hm = 0.5 * (1.0 - I);
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = std::exp(-I * (E0 * tg_over_hbar));
  m(1, 1) = hp;
  m(1, 2) = hm;
  m(2, 1) = hm;
  m(2, 2) = hp;
  m(3, 3) = std::exp(I * (E0 * tg_over_hbar));
  gate.matrix = prefactor * m;
  return gate;
}

Eigen::Matrix4cd sqrt_swap() {
  const complex<double> hp = 0.5 * (1.0 + I), hm = 0.5 * (1.0 - I);
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m(1, 1) = hp;
  m(1, 2) = hm;
  m(2, 1) = hm;
  m(2, 2) = hp;
  return m;
}

Eigen::Matrix4cd phase_gate_pair(double theta) {
  const complex<double> ph = std::exp(I * theta);
  Eigen::Vector4cd d;
  d << 1.0, ph, ph, ph * ph;
  return d.asDiagonal();
}

SqrtSwapDecomposition decompose_sqrt_swap(const Eigen::Matrix4cd& matrix) {
  // e^{ig} sqrt(SWAP) (R (x) R) has corner (0,0) = e^{ig} and central block
  // e^{i(g+theta)} B with B(0,0) = (1+i)/2; read both phases off directly.
  SqrtSwapDecomposition dec;
  dec.global_phase = wrap_2pi(std::arg(matrix(0, 0)));
  const complex<double> b00 = 0.5 * (1.0 + I);
  dec.theta = wrap_2pi(
      std::arg(matrix(1, 1) / (b00 * std::exp(I * dec.global_phase))));
  const Eigen::Matrix4cd rebuilt = std::exp(I * dec.global_phase) *
                                   sqrt_swap() * phase_gate_pair(dec.theta);
  dec.residual = (matrix - rebuilt).cwiseAbs().maxCoeff();
  if (dec.residual > 1e-6) {
    throw StructureError(
        "matrix is not of collision-gate form: sqrt(SWAP) decomposition "
        "residual exceeds 1e-6");
  }
  return dec;
}

CollisionCount collision_count(double J_ex, double omega, bool driven) {
  if (J_ex <= 0.0) throw Error("zero-coupling: J_ex must be > 0");
  if (omega <= 0.0) throw Error("omega must be > 0");
  using constants::hbar;
  CollisionCount cc;
  cc.count = driven ? 3.0 * hbar * omega / (8.0 * J_ex)
                    : 3.0 * hbar * omega / (4.0 * J_ex);
  cc.nearest = std::round(cc.count);
  cc.mistuning = cc.count - cc.nearest;
  return cc;
}

}  // namespace iongate
