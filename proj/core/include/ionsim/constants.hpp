#pragma once

// CODATA 2018 values, SI units.
namespace ionsim::constants {

inline constexpr double planck_h = 6.62607015e-34;        // J s (exact)
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double speed_of_light = 299792458.0;     // m/s (exact)
inline constexpr double elementary_charge = 1.602176634e-19; // C (exact)
inline constexpr double electron_mass = 9.1093837015e-31; // kg
inline constexpr double proton_mass = 1.67262192369e-27;  // kg
inline constexpr double atomic_mass_unit = 1.66053906660e-27; // kg
inline constexpr double epsilon_0 = 8.8541878128e-12;     // F/m
inline constexpr double bohr_magneton = 9.2740100783e-24; // J/T
inline constexpr double bohr_radius = 5.29177210903e-11;  // m

// Yb-171 ion mass (171 u is good enough for recoil estimates here).
inline constexpr double yb171_mass = 171.0 * atomic_mass_unit;

} // namespace ionsim::constants
