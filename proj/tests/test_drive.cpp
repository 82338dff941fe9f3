#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "iongate/constants.hpp"
#include "iongate/coupling.hpp"
#include "iongate/drive.hpp"
#include "iongate/errors.hpp"

using namespace iongate;

namespace {

TrapConfig yb_design() {
  return design_point_alpha1(lookup_species("Yb-171"),
                             constants::two_pi * 1e7, 5.0);
}

}  // namespace

TEST_CASE("bistable amplitude scales as sqrt(f)") {
  const auto cfg = yb_design();
  DrivingConfig drive;
  drive.zeta = 1e-10;
  drive.omega_f = 2.0 * cfg.omega_z;
  drive.resonant = true;
  drive.f = 0.01;
  const double a1 = bistable_amplitude(cfg, drive);
  drive.f = 0.04;
  const double a2 = bistable_amplitude(cfg, drive);
  CHECK(a2 == doctest::Approx(2.0 * a1).epsilon(1e-12));
  CHECK(a1 ==
        doctest::Approx(std::sqrt(2.0 * 0.01 * cfg.species.mass *
                                  cfg.omega_z * cfg.omega_z / (3.0 * 1e-10)))
            .epsilon(1e-12));
}

TEST_CASE("off-resonant drive is rejected") {
  const auto cfg = yb_design();
  DrivingConfig drive;
  drive.zeta = 1e-10;
  drive.f = 0.01;
  drive.omega_f = 2.1 * cfg.omega_z;
  CHECK_THROWS_AS(bistable_amplitude(cfg, drive), RegimeError);
}

TEST_CASE("matched drive reproduces L/2 exactly") {
  const auto cfg = yb_design();
  const double zeta = 3.7e-9;
  const auto drive = match_drive_to_separation(cfg, zeta);
  CHECK(drive.omega_f == doctest::Approx(2.0 * cfg.omega_z).epsilon(1e-15));
  CHECK(drive.resonant);
  CHECK(drive.f == doctest::Approx(3.0 / 8.0 * zeta * cfg.L * cfg.L /
                                   (cfg.species.mass * cfg.omega_z *
                                    cfg.omega_z))
                       .epsilon(1e-14));
  CHECK(bistable_amplitude(cfg, drive) ==
        doctest::Approx(cfg.L / 2.0).epsilon(1e-12));
}

TEST_CASE("position-shift bound at the Yb design point") {
  const auto cfg = yb_design();
  const double U = direct_interaction_renormalized(cfg);
  DrivingConfig drive;
  drive.f = 1.0;  // report the product (Delta L / L) * f via f = 1
  drive.omega_f = 2.0 * cfg.omega_z;
  drive.resonant = true;
  const auto bound = position_shift_bound(cfg, drive, U);
  CHECK(bound.ratio == doctest::Approx(1.4368e-4).epsilon(1e-2));
  // minimum drive keeping the shift below 1%: f > ratio(f = 1) / 0.01
  CHECK(bound.f_min_percent ==
        doctest::Approx(bound.ratio / 0.01).epsilon(1e-10));

  // monotone: doubling f halves the shift
  drive.f = 2.0;
  CHECK(position_shift_bound(cfg, drive, U).ratio ==
        doctest::Approx(bound.ratio / 2.0).epsilon(1e-12));
  // no direct interaction, no shift
  CHECK(position_shift_bound(cfg, drive, 0.0).ratio == 0.0);
  // non-positive f rejected
  drive.f = 0.0;
  CHECK_THROWS_AS(position_shift_bound(cfg, drive, U), Error);
}
