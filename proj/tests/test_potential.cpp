#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "iongate/constants.hpp"
#include "iongate/erfcx.hpp"
#include "iongate/errors.hpp"
#include "iongate/potential.hpp"
#include "mpfr_oracle.hpp"

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

TEST_CASE("erfcx against the multiprecision oracle") {
  std::vector<double> xs = {0.0, 1e-6, 0.1, 0.5, 1.0, 3.0, 7.0, 11.9,
                            12.0, 12.1, 20.0, 50.0, 200.0, 1e4};
  for (double x : xs) {
    CAPTURE(x);
    CHECK(erfcx(x) == doctest::Approx(oracle::erfcx_mp(x)).epsilon(1e-13));
  }
  // beyond the oracle's exponent range: leading asymptotic 1/(x sqrt(pi))
  CHECK(erfcx(1e8) ==
        doctest::Approx(1.0 / (1e8 * std::sqrt(constants::pi)))
            .epsilon(1e-13));
  // negative branch: reflection e^{x^2}(2 - erfcx(-x) e^{-x^2}) territory
  for (double x : {-0.1, -1.0, -3.0, -5.0}) {
    CAPTURE(x);
    CHECK(erfcx(x) == doctest::Approx(oracle::erfcx_mp(x)).epsilon(1e-12));
  }
}

TEST_CASE("effective potential barrier value") {
  const auto cfg = yb_config();
  const auto params = effective_potential_params(cfg);
  const double expected =
      params.coulomb_prefactor * std::sqrt(constants::pi * 10.0 / 2.0);
  CHECK(v_eff_barrier(params) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(v_eff(params, 0.0) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("effective potential approaches bare Coulomb at long range") {
  const auto cfg = yb_config();
  const auto params = effective_potential_params(cfg);
  const double z0 = params.z0;
  const double w = params.omega_perp;
  {
    const double r = 100.0 * z0 * std::sqrt(2.0 / w);
    const double coulomb = params.coulomb_prefactor * z0 / r;
    CHECK(std::abs(v_eff(params, r) / coulomb - 1.0) < 1e-2);
  }
  {
    const double r = 1e3 * z0;
    const double coulomb = params.coulomb_prefactor * z0 / r;
    CHECK(std::abs(v_eff(params, r) / coulomb - 1.0) < 1e-3);
  }
}

TEST_CASE("effective potential is finite, positive, decreasing, convex") {
  const auto cfg = yb_config();
  const auto params = effective_potential_params(cfg);
  const double z0 = params.z0;
  double prev = v_eff(params, 0.0);
  double prev_r = 0.0;
  double prev_slope = 0.0;
  bool have_slope = false;
  for (int i = 0; i <= 120; ++i) {
    const double r = z0 * std::pow(10.0, -2.0 + i * (8.0 / 120.0));
    const double v = v_eff(params, r);
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
    CHECK(v < prev);
    const double slope = (v - prev) / (r - prev_r);
    if (have_slope) CHECK(slope > prev_slope);  // slope increasing: convex
    prev = v;
    prev_r = r;
    prev_slope = slope;
    have_slope = true;
  }
  CHECK(std::isfinite(v_eff(params, 1e6 * z0)));
}

TEST_CASE("effective potential against the multiprecision oracle") {
  const auto cfg = yb_config();
  const auto frame = reduced::make_frame(cfg);
  const double w = frame.omega_perp;
  // w = 10, r = z0 in reduced units
  const double got = reduced::v_eff(frame.q, w, 1.0);
  const double want = oracle::v_eff_reduced_mp(frame.q, w, 1.0);
  CHECK(got == doctest::Approx(want).epsilon(1e-12));
  // and in SI through the params path at w = 5
  auto cfg5 = cfg;
  cfg5.omega_xy = 5.0 * cfg5.omega_z;
  const auto p5 = effective_potential_params(cfg5);
  const auto f5 = reduced::make_frame(cfg5);
  const double si = v_eff(p5, p5.z0);
  const double ref = oracle::v_eff_reduced_mp(f5.q, 5.0, 1.0) * f5.energy;
  CHECK(si == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("linearized potential near the origin") {
  const auto cfg = yb_config();
  const auto params = effective_potential_params(cfg);
  const double r = 0.01 * params.z0 * std::sqrt(2.0 / params.omega_perp);
  const double exact = v_eff(params, r);
  const double lin = v_eff_linearized(params, r);
  CHECK(std::abs(lin / exact - 1.0) < 1e-3);
}

TEST_CASE("barrier parameter alpha") {
  auto cfg = yb_config();
  SUBCASE("scales as L^2") {
    const double a1 = alpha(cfg);
    cfg.L *= 3.0;
    CHECK(alpha(cfg) == doctest::Approx(9.0 * a1).epsilon(1e-12));
  }
  SUBCASE("near unity at the 103 um Yb reference point") {
    cfg.omega_xy = 5.0 * cfg.omega_z;  // the reference uses omega_perp = 5
    const double a = alpha(cfg);
    CHECK(a == doctest::Approx(1.0).epsilon(2e-2));
  }
  SUBCASE("regime classification") {
    CHECK(collision_regime(2.0) == CollisionRegime::colliding);
    CHECK(collision_regime(0.5) == CollisionRegime::marginal);
    CHECK(collision_regime(0.05) == CollisionRegime::classical_blocked);
    CHECK(std::string(to_string(CollisionRegime::colliding)) == "colliding");
  }
}
