#pragma once

// CODATA 2018 fundamental constants, SI units.

namespace iongate::constants {

inline constexpr double hbar = 1.054571817e-34;               // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double atomic_mass_unit = 1.66053906660e-27; // kg
inline constexpr double electron_mass = 9.1093837015e-31;     // kg
inline constexpr double euler_mascheroni = 0.57721566490153286;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// Q^2/(4 pi eps0) for a unit elementary charge, J m
inline constexpr double coulomb_constant_e2 =
    elementary_charge * elementary_charge / (4.0 * pi * vacuum_permittivity);

}  // namespace iongate::constants
