#include "iongate/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "iongate/constants.hpp"
#include "iongate/erfcx.hpp"
#include "iongate/errors.hpp"
#include "iongate/quadrature.hpp"

namespace iongate {

namespace {

using constants::pi;

// Gaussian-reduced direct term at phase angle theta: the two-particle
// expectation of V_eff collapses to a 1D integral over the relative
// coordinate with unit-variance Gaussian weight centered at the instantaneous
// separation 2 x(theta). All quantities reduced (z0 = 1, hbar omega_z = 1).
double direct_term(double q, double w, double x, double rel_tol) {
  const double mu = -2.0 * x;
  const auto f = [&](double u) {
    return reduced::v_eff(q, w, u) *
           std::exp(-0.5 * (u - mu) * (u - mu)) / std::sqrt(2.0 * pi);
  };
  const double a = mu - 10.0, b = mu + 10.0;
  // V_eff has a |u| kink at u = 0; split there when it is inside the window.
  if (a < 0.0 && 0.0 < b) {
    return integrate_adaptive(f, a, 0.0, rel_tol) +
           integrate_adaptive(f, 0.0, b, rel_tol);
  }
  return integrate_adaptive(f, a, b, rel_tol);
}

// Exchange-kernel cosine transform I(k) = int_0^umax e^{-u^2/2}
// erfcx(sqrt(w/2) u) cos(k u) du. Positive for all k (Polya).
double exchange_transform(double w, double k, double umax) {
  const double c = std::sqrt(w / 2.0);
  return integrate_oscillatory_cosine(
      [&](double u) { return std::exp(-0.5 * u * u) * erfcx(c * u); }, k,
      umax);
}

struct TimeAverages {
  double direct;    // <D(theta)>
  double exchange;  // <E(theta)>
  double achieved_rel_tol;
};

// Quarter-period trapezoid average of the direct and exchange terms, with
// node doubling until both averages are converged. The exchange term lives
// under a Gaussian collision envelope of angular width ~1/lambda, so the
// starting node count scales with lambda.
TimeAverages time_average(double q, double w, double lambda,
                          const QuadratureSettings& s) {
  const double half_pi = 0.5 * pi;
  const double inner_tol = 0.05 * s.rel_tol;
  const auto eval_direct = [&](double theta) {
    return direct_term(q, w, 0.5 * lambda * std::cos(theta), inner_tol);
  };
  const auto eval_exchange = [&](double theta) {
    const double x = 0.5 * lambda * std::cos(theta);
    const double env = std::exp(-2.0 * x * x);
    if (env < 1e-18) return 0.0;
    const double p = 0.5 * lambda * std::sin(theta);
    return q * std::sqrt(w) * env *
           exchange_transform(w, 2.0 * p, s.spatial_truncation);
  };

  long n = std::max<long>(s.time_nodes, static_cast<long>(8.0 * lambda) + 1);
  if (n % 2) ++n;
  constexpr long n_cap = 1L << 21;
  n = std::min(n, n_cap);

  double h = half_pi / n;
  double sum_d = 0.5 * (eval_direct(0.0) + eval_direct(half_pi));
  double sum_e = 0.5 * (eval_exchange(0.0) + eval_exchange(half_pi));
  for (long i = 1; i < n; ++i) {
    sum_d += eval_direct(i * h);
    sum_e += eval_exchange(i * h);
  }
  double avg_d = sum_d / n, avg_e = sum_e / n;

  double achieved = 1.0;
  while (true) {
    if (2 * n > n_cap) {
      throw ConvergenceError(
          "time average did not converge to the requested tolerance",
          achieved);
    }
    // refine: previous nodes keep their weights, add midpoints
    double mid_d = 0.0, mid_e = 0.0;
    for (long i = 0; i < n; ++i) {
      const double theta = (i + 0.5) * h;
      mid_d += eval_direct(theta);
      mid_e += eval_exchange(theta);
    }
    n *= 2;
    h *= 0.5;
    sum_d += mid_d;
    sum_e += mid_e;
    const double new_d = sum_d / n, new_e = sum_e / n;
    const double rel_d = std::abs(new_d - avg_d) /
                         std::max(std::abs(new_d), 1e-300);
    const double rel_e =
        (new_e == 0.0 && avg_e == 0.0)
            ? 0.0
            : std::abs(new_e - avg_e) / std::max(std::abs(new_e), 1e-300);
    avg_d = new_d;
    avg_e = new_e;
    achieved = std::max(rel_d, rel_e);
    const double abs_scale = std::max(std::abs(new_d), std::abs(new_e));
    if (achieved <= s.rel_tol || abs_scale * achieved <= s.abs_tol) break;
  }
  return {avg_d, avg_e, achieved};
}

void validate_settings(const QuadratureSettings& s) {
  if (!(s.rel_tol > 0.0 && s.rel_tol <= 1e-3)) {
    throw Error("rel_tol must be in (0, 1e-3]");
  }
  if (s.time_nodes < 16 || s.time_nodes % 2 != 0) {
    throw Error("time_nodes must be >= 16 and even");
  }
  if (s.spatial_truncation <= 0.0) throw Error("spatial_truncation must be > 0");
}

double overlap_sq(double lambda) { return std::exp(-0.5 * lambda * lambda); }

// Interference term implied by the asymptotic form: A = sqrt(pi) lambda^3
// J_red / (q omega_perp).
double implied_interference(double j_reduced, double q, double w,
                            double lambda) {
  return std::sqrt(pi) * lambda * lambda * lambda * j_reduced / (q * w);
}

}  // namespace

const char* to_string(CouplingMethod method) {
  switch (method) {
    case CouplingMethod::quadrature: return "quadrature";
    case CouplingMethod::asymptotic: return "asymptotic";
    case CouplingMethod::classical: return "classical";
  }
  return "?";
}

CouplingResult level_shifts_quadrature(const TrapConfig& cfg,
                                       const QuadratureSettings& settings) {
  validate_settings(settings);
  auto warnings = check_trap_config(cfg);
  const auto fr = reduced::make_frame(cfg);
  if (fr.omega_perp < 3.0) {
    throw RegimeError("level_shifts_quadrature requires omega_perp >= 3");
  }
  if (alpha(cfg) <= 1.0) {
    warnings.push_back(
        "alpha <= 1: ions do not classically overcome the Coulomb barrier; "
        "quadrature result is outside the colliding regime");
  }
  if (fr.lambda > 1e4) {
    warnings.push_back(
        "oscillatory exchange integrand: relative momentum 2 p_max z0/hbar "
        "exceeds 1e4; consider larger time_nodes");
  }
  const double s2 = overlap_sq(fr.lambda);
  if (1.0 - s2 < 1e-15) {
    throw DegenerateOverlapError("L/z0 too small: symmetrization degenerate");
  }

  const auto avg = time_average(fr.q, fr.omega_perp, fr.lambda, settings);
  const double vp_red = (avg.direct + avg.exchange) / (1.0 + s2);
  const double vm_red = (avg.direct - avg.exchange) / (1.0 - s2);
  const double j_red = 0.5 * (vp_red - vm_red);

  CouplingResult res;
  res.v_plus = vp_red * fr.energy;
  res.v_minus = vm_red * fr.energy;
  res.exchange_J = 0.5 * (res.v_plus - res.v_minus);
  res.direct_U = 0.5 * (res.v_plus + res.v_minus);
  res.interference_A =
      implied_interference(j_red, fr.q, fr.omega_perp, fr.lambda);
  res.method = CouplingMethod::quadrature;
  res.achieved_rel_tol = avg.achieved_rel_tol;
  res.warnings = std::move(warnings);
  return res;
}

CouplingResult level_shifts_bruteforce_oracle(const TrapConfig& cfg,
                                              const OracleGrid& grid) {
  auto warnings = check_trap_config(cfg);
  const auto fr = reduced::make_frame(cfg);
  const long n = grid.spatial_nodes;
  if (n < 8 || grid.time_nodes < 4) throw Error("oracle grid too coarse");
  if (n * n > 10'000'000L) {
    throw ResourceLimitError("oracle grid exceeds 1e7 nodes");
  }

  const double zmax = 0.5 * fr.lambda + grid.padding;
  const double h = 2.0 * zmax / n;
  const long np = n + 1;
  std::vector<double> z(np), vtab(np);
  for (long i = 0; i < np; ++i) z[i] = -zmax + i * h;
  for (long d = 0; d < np; ++d) {
    vtab[d] = reduced::v_eff(fr.q, fr.omega_perp, d * h);
  }

  std::vector<double> a(np), b(np), gr(np), gi(np);
  const long nt = grid.time_nodes;
  const double norm = 1.0 / std::sqrt(pi);  // |N(t)|^2 for z0 = 1

  double num_p = 0.0, num_m = 0.0, den_p = 0.0, den_m = 0.0;
  for (long it = 0; it <= nt; ++it) {
    const double wt = (it == 0 || it == nt) ? 0.5 : 1.0;
    const double theta = (0.5 * pi) * it / nt;
    const double x = 0.5 * fr.lambda * std::cos(theta);
    const double p = 0.5 * fr.lambda * std::sin(theta);
    for (long i = 0; i < np; ++i) {
      const double tw = (i == 0 || i == n) ? 0.5 : 1.0;
      const double dp = z[i] + x, dm = z[i] - x;
      const double amp_phi = norm * std::exp(-dp * dp);   // |phi|^2
      const double amp_var = norm * std::exp(-dm * dm);   // |varphi|^2
      a[i] = tw * amp_phi;
      b[i] = tw * amp_var;
      // g = phi * conj(varphi) = sqrt(|phi|^2 |varphi|^2) e^{2 i p z}
      const double mag = norm * std::exp(-0.5 * (dp * dp + dm * dm));
      gr[i] = tw * mag * std::cos(2.0 * p * z[i]);
      gi[i] = tw * mag * std::sin(2.0 * p * z[i]);
    }
    double direct = 0.0, exch = 0.0;
    for (long i = 0; i < np; ++i) {
      const double ai = a[i], gri = gr[i], gii = gi[i];
      double di = 0.0, ei = 0.0;
      for (long j = 0; j < np; ++j) {
        const double v = vtab[std::abs(i - j)];
        di += v * b[j];
        ei += v * (gri * gr[j] + gii * gi[j]);
      }
      direct += ai * di;
      exch += ei;
    }
    const double h2 = h * h;
    const double dsum = 2.0 * direct * h2;
    const double esum = 2.0 * exch * h2;
    double na = 0.0, nb = 0.0, sgr = 0.0, sgi = 0.0;
    for (long i = 0; i < np; ++i) {
      na += a[i];
      nb += b[i];
      sgr += gr[i];
      sgi += gi[i];
    }
    na *= h;
    nb *= h;
    const double s2num = (sgr * sgr + sgi * sgi) * h * h;
    num_p += wt * (dsum + esum);
    num_m += wt * (dsum - esum);
    den_p += wt * 2.0 * (na * nb + s2num);
    den_m += wt * 2.0 * (na * nb - s2num);
  }

  const double vp_red = num_p / den_p;
  const double vm_red = num_m / den_m;

  CouplingResult res;
  res.v_plus = vp_red * fr.energy;
  res.v_minus = vm_red * fr.energy;
  res.exchange_J = 0.5 * (res.v_plus - res.v_minus);
  res.direct_U = 0.5 * (res.v_plus + res.v_minus);
  res.interference_A = implied_interference(0.5 * (vp_red - vm_red), fr.q,
                                            fr.omega_perp, fr.lambda);
  res.method = CouplingMethod::quadrature;
  res.achieved_rel_tol = 0.0;
  warnings.push_back("bruteforce tensor-grid oracle evaluation");
  res.warnings = std::move(warnings);
  return res;
}

CouplingResult coupling_asymptotic(const TrapConfig& cfg) {
  auto warnings = check_trap_config(cfg);
  const auto fr = reduced::make_frame(cfg);
  const double reach = fr.lambda / std::sqrt(fr.omega_perp / 2.0);
  if (reach <= 10.0) {
    warnings.push_back(
        "long-distance limit is weak: L/(z0 sqrt(omega_perp/2)) <= 10");
  }
  const double j_red =
      fr.q * (2.0 * fr.omega_perp / pi) / std::pow(fr.lambda, 3);

  CouplingResult res;
  res.exchange_J = j_red * fr.energy;
  res.direct_U = direct_interaction_renormalized(cfg);
  res.v_plus = res.direct_U + res.exchange_J;
  res.v_minus = res.direct_U - res.exchange_J;
  res.interference_A = 2.0 / std::sqrt(pi);
  res.method = CouplingMethod::asymptotic;
  res.warnings = std::move(warnings);
  return res;
}

double interference_term(const TrapConfig& cfg, double rel_tol) {
  check_trap_config(cfg);
  const auto fr = reduced::make_frame(cfg);
  QuadratureSettings s;
  s.rel_tol = rel_tol;
  // q cancels in A; evaluate the exchange average at unit strength.
  const auto avg = time_average(1.0, fr.omega_perp, fr.lambda, s);
  const double j_exchange_only = avg.exchange;  // overlap corrections excluded
  return implied_interference(j_exchange_only, 1.0, fr.omega_perp, fr.lambda);
}

double interference_integrand(double lambda, double omega_perp, double z,
                              double p) {
  return (2.0 * lambda * lambda / omega_perp) * std::exp(-0.5 * z * z) *
         erfcx(std::sqrt(omega_perp / 2.0) * z) * std::cos(2.0 * p * z);
}

double restriction_product(const IonSpecies& species, double omega_xy) {
  if (omega_xy <= 0.0) throw Error("omega_xy must be > 0");
  using namespace constants;
  const double q2 = species.charge * species.charge;
  const double coulomb_8pi = q2 / (8.0 * pi * vacuum_permittivity);
  return std::pow(coulomb_8pi, -0.5) * std::pow(hbar / two_pi, 1.75) *
         std::pow(std::pow(omega_xy, 5) / species.mass, 0.25);
}

TrapConfig design_point_alpha1(const IonSpecies& species, double omega_xy,
                               double omega_perp_target) {
  if (omega_perp_target < 3.0) {
    throw RegimeError("design point requires omega_perp target >= 3");
  }
  using namespace constants;
  const double q2 = species.charge * species.charge;
  const double coulomb = q2 / (4.0 * pi * vacuum_permittivity);
  const double L = omega_perp_target * std::sqrt(coulomb) *
                   std::pow(species.mass * hbar * std::pow(omega_xy, 3) /
                                (8.0 * pi),
                            -0.25);
  TrapConfig cfg{species, omega_xy / omega_perp_target, omega_xy, L};
  check_trap_config(cfg);
  return cfg;
}

double omega_perp_for_alpha1(const IonSpecies& species, double omega_xy,
                             double L) {
  if (omega_xy <= 0.0 || L <= 0.0) throw Error("omega_xy and L must be > 0");
  using namespace constants;
  const double q2 = species.charge * species.charge;
  const double coulomb = q2 / (4.0 * pi * vacuum_permittivity);
  return L * std::pow(coulomb, -0.5) *
         std::pow(species.mass * hbar * std::pow(omega_xy, 3) / (8.0 * pi),
                  0.25);
}

double coupling_jld2(const TrapConfig& cfg) {
  check_trap_config(cfg);
  using namespace constants;
  const double a = alpha(cfg);
  return std::pow(hbar / two_pi, 1.5) *
         std::sqrt(cfg.omega_xy / cfg.species.mass) * (2.0 / a) / cfg.L;
}

double direct_interaction_renormalized(const TrapConfig& cfg) {
  check_trap_config(cfg);
  using namespace constants;
  const auto fr = reduced::make_frame(cfg);
  const double arg = std::pow(2.0, 1.5) * std::exp(0.5 * euler_mascheroni) *
                     std::sqrt(fr.omega_perp) * fr.lambda;
  if (arg <= 1.0) {
    throw RegimeError(
        "renormalized charge undefined: log argument <= 1 (L too small)");
  }
  const double q2 = cfg.species.charge * cfg.species.charge;
  const double qt2 = q2 * (2.0 / pi) * std::log(arg);
  return qt2 / (4.0 * pi * vacuum_permittivity * cfg.L);
}

CouplingResult classical_direct_interaction(const TrapConfig& cfg) {
  auto warnings = check_trap_config(cfg);
  using namespace constants;
  const double a = alpha(cfg);
  if (a >= 0.1) {
    throw RegimeError(
        "classical treatment requires alpha << 1 (enforced: alpha < 0.1)");
  }
  const double q2 = cfg.species.charge * cfg.species.charge;
  const double e2 = std::exp(2.0);
  const double arg = two_pi * e2 * vacuum_permittivity * cfg.species.mass *
                     cfg.omega_z * cfg.omega_z * std::pow(cfg.L, 3) / q2;
  if (arg <= 1.0) {
    throw RegimeError(
        "classical renormalized charge undefined: log argument <= 1");
  }
  const double qt2 = q2 * (2.0 / pi) * std::log(arg);

  CouplingResult res;
  res.exchange_J = 0.0;
  res.direct_U = qt2 / (4.0 * pi * vacuum_permittivity * cfg.L);
  res.v_plus = res.direct_U;
  res.v_minus = res.direct_U;
  res.interference_A = 0.0;
  res.method = CouplingMethod::classical;
  res.warnings = std::move(warnings);
  return res;
}

InteractionTime interaction_time_estimate(const TrapConfig& cfg) {
  check_trap_config(cfg);
  using namespace constants;
  const double q2 = cfg.species.charge * cfg.species.charge;
  const double coulomb = q2 / (4.0 * pi * vacuum_permittivity);
  const double z0 = cfg.z0();
  const double w = cfg.omega_perp();
  InteractionTime it;
  it.delta_tau = std::pow(coulomb, -0.5) * std::sqrt(cfg.species.mass) *
                 std::pow(z0, 1.5) * std::pow(2.0 / w, 0.75);
  it.validity_ratio =
      std::pow(pi, -0.75) * std::sqrt(2.0 / w) * (z0 / cfg.L);
  it.perturbative_valid = it.validity_ratio < 0.1;
  return it;
}

}  // namespace iongate
