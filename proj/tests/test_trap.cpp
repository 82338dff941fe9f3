#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "iongate/constants.hpp"
#include "iongate/errors.hpp"
#include "iongate/quadrature.hpp"
#include "iongate/trap.hpp"

using namespace iongate;

namespace {

TrapConfig yb_config(double L = 1.03e-4) {
  TrapConfig cfg;
  cfg.species = lookup_species("Yb-171");
  cfg.omega_z = constants::two_pi * 2e6;
  cfg.omega_xy = constants::two_pi * 20e6;
  cfg.L = L;
  return cfg;
}

}  // namespace

TEST_CASE("ground-state size of Yb-171 at 2 MHz axial confinement") {
  const auto cfg = yb_config();
  // sqrt(hbar / m omega_z), frozen reference 5.4374 nm
  CHECK(cfg.z0() == doctest::Approx(5.4374e-9).epsilon(1e-4));
  CHECK(cfg.omega_perp() == doctest::Approx(10.0).epsilon(1e-12));
  const auto scales = derived_scales(cfg);
  CHECK(scales.z0 == doctest::Approx(cfg.z0()).epsilon(1e-15));
  CHECK(scales.omega_perp == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("configuration validation") {
  auto cfg = yb_config();
  CHECK(check_trap_config(cfg).empty());

  SUBCASE("omega_xy below omega_z is rejected") {
    cfg.omega_xy = 0.5 * cfg.omega_z;
    CHECK_THROWS_AS(check_trap_config(cfg), Error);
  }
  SUBCASE("non-positive L is rejected") {
    cfg.L = 0.0;
    CHECK_THROWS_AS(check_trap_config(cfg), Error);
  }
  SUBCASE("non-positive omega_z is rejected") {
    cfg.omega_z = 0.0;
    CHECK_THROWS_AS(check_trap_config(cfg), Error);
  }
  SUBCASE("weak transverse confinement only warns") {
    cfg.omega_xy = 2.0 * cfg.omega_z;
    const auto warnings = check_trap_config(cfg);
    REQUIRE(!warnings.empty());
  }
}

TEST_CASE("coherent pair trajectory") {
  const auto cfg = yb_config();
  const double T = constants::two_pi / cfg.omega_z;

  const auto s0 = coherent_pair_at(cfg, 0.0);
  CHECK(s0.x_t == doctest::Approx(cfg.L / 2).epsilon(1e-14));
  CHECK(s0.p_t == doctest::Approx(0.0).scale(cfg.species.mass * cfg.omega_z *
                                             cfg.L / 2));

  const auto sq = coherent_pair_at(cfg, T / 4);
  CHECK(sq.x_t == doctest::Approx(0.0).scale(cfg.L / 2));
  CHECK(sq.p_t ==
        doctest::Approx(cfg.species.mass * cfg.omega_z * cfg.L / 2)
            .epsilon(1e-12));

  // phase-space circle: (x/(L/2))^2 + (p/(m w L/2))^2 = 1 at all times
  for (double t : {0.13 * T, 0.37 * T, 0.62 * T, 0.91 * T}) {
    const auto s = coherent_pair_at(cfg, t);
    const double xn = s.x_t / (cfg.L / 2);
    const double pn = s.p_t / (cfg.species.mass * cfg.omega_z * cfg.L / 2);
    CHECK(xn * xn + pn * pn == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.overlap_magnitude == doctest::Approx(s0.overlap_magnitude));
  }
}

TEST_CASE("overlap magnitude matches the Gaussian closed form") {
  auto cfg = yb_config();
  cfg.L = 10.0 * cfg.z0();
  const auto s = coherent_pair_at(cfg, 0.0);
  CHECK(s.overlap_magnitude == doctest::Approx(std::exp(-25.0)).epsilon(1e-12));
}

TEST_CASE("overlap agrees with direct numerical inner product") {
  // |<phi_{+L/2} | phi_{-L/2}>| for unit-width Gaussians = e^{-lambda^2/4};
  // evaluate the defining integral numerically for a spread of separations.
  auto cfg = yb_config();
  const double z0 = cfg.z0();
  for (double lambda : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    cfg.L = lambda * z0;
    const auto s = coherent_pair_at(cfg, 0.0);
    // product of two real Gaussian wavepackets centered at +-lambda/2
    const auto f = [lambda](double u) {
      const double a = u - lambda / 2, b = u + lambda / 2;
      return std::exp(-0.5 * a * a - 0.5 * b * b) / std::sqrt(constants::pi);
    };
    const double numeric =
        integrate_adaptive(f, -lambda / 2 - 10.0, lambda / 2 + 10.0, 1e-12);
    CHECK(s.overlap_magnitude == doctest::Approx(numeric).epsilon(1e-8));
  }
}

TEST_CASE("symmetrization norms") {
  auto cfg = yb_config();
  const double z0 = cfg.z0();

  SUBCASE("large separation: both norms tend to 1/sqrt(2)") {
    cfg.L = 40.0 * z0;
    const auto n = symmetrization_norms(cfg);
    CHECK(n.n_plus == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(n.n_minus == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  }
  SUBCASE("moderate separation matches the closed form") {
    cfg.L = 2.0 * z0;
    const double S2 = std::exp(-2.0);  // e^{-lambda^2/2}
    const auto n = symmetrization_norms(cfg);
    CHECK(n.n_plus ==
          doctest::Approx(1.0 / std::sqrt(2.0 * (1.0 + S2))).epsilon(1e-12));
    CHECK(n.n_minus ==
          doctest::Approx(1.0 / std::sqrt(2.0 * (1.0 - S2))).epsilon(1e-12));
  }
  SUBCASE("coincident wavepackets are degenerate") {
    cfg.L = 1e-12 * z0;
    CHECK_THROWS_AS(symmetrization_norms(cfg), DegenerateOverlapError);
  }
}
