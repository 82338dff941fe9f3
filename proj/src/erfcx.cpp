#include "iongate/erfcx.hpp"

#include <cmath>

#include "iongate/constants.hpp"

namespace iongate {

namespace {

// Laplace continued fraction, evaluated bottom-up with fixed depth.
// erfcx(x) = 1/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// Accurate to full double precision for x >= 12.
double erfcx_continued_fraction(double x) {
  constexpr int depth = 32;
  double frac = 0.0;
  for (int n = depth; n >= 1; --n) {
    frac = (0.5 * n) / (x + frac);
  }
  return 1.0 / (std::sqrt(constants::pi) * (x + frac));
}

}  // namespace

double erfcx(double x) {
  if (x < 0.0) {
    // erfcx(-x) = 2 exp(x^2) - erfcx(x); overflows for x < -26.6.
    return 2.0 * std::exp(x * x) - erfcx(-x);
  }
  if (x < 12.0) {
    return std::exp(x * x) * std::erfc(x);
  }
  return erfcx_continued_fraction(x);
}

}  // namespace iongate
