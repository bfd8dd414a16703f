#pragma once

#include <array>
#include <string>
#include <vector>

namespace sqdw {

struct Atom {
  std::string symbol;
  int z = 0;
  std::array<double, 3> xyz{};  // Bohr
};

enum class LengthUnit { angstrom, bohr };

struct Molecule {
  std::vector<Atom> atoms;
  int charge = 0;
  int n_electrons = 0;

  double nuclear_repulsion() const;
};

int element_z(const std::string& symbol);

// Geometry text: one `symbol x y z` per line ('/' and ';' also split records).
Molecule parse_geometry(const std::string& text, LengthUnit unit, int charge);

Molecule translated(const Molecule& mol, const std::array<double, 3>& shift_bohr);
Molecule rotated(const Molecule& mol, const std::array<double, 9>& rot_row_major);

}  // namespace sqdw
