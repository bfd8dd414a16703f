#pragma once

namespace sqdw {

// Internal units are Bohr / Hartree throughout; angstrom is accepted only at
// the geometry parse boundary.
inline constexpr double kAngstromToBohr = 1.8897259886;
inline constexpr double kPi = 3.14159265358979323846;

// 1 kcal/mol in Hartree, the usual chemical-accuracy threshold.
inline constexpr double kChemicalAccuracyHa = 1.594e-3;

}  // namespace sqdw
