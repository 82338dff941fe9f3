#pragma once

namespace iongate {

/// Scaled complementary error function e^{x^2} erfc(x).
/// Finite for all x >= 0; for x < 0 it grows like 2 e^{x^2} and overflows
/// below roughly x = -26.6.
double erfcx(double x);

}  // namespace iongate
