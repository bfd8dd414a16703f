#include "core/molecule.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "core/constants.hpp"
#include "core/error.hpp"

namespace sqdw {

namespace {

const std::map<std::string, int>& element_table() {
  static const std::map<std::string, int> table = {
      {"H", 1}, {"He", 2}, {"Li", 3}, {"Be", 4}, {"C", 6},
      {"N", 7}, {"O", 8},  {"S", 16}, {"Cl", 17},
  };
  return table;
}

}  // namespace

int element_z(const std::string& symbol) {
  auto it = element_table().find(symbol);
  require(it != element_table().end(), ErrorKind::unsupported,
          "unsupported element: '" + symbol + "'");
  return it->second;
}

double Molecule::nuclear_repulsion() const {
  double e = 0.0;
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    for (std::size_t b = a + 1; b < atoms.size(); ++b) {
      double r2 = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double d = atoms[a].xyz[k] - atoms[b].xyz[k];
        r2 += d * d;
      }
      e += atoms[a].z * atoms[b].z / std::sqrt(r2);
    }
  }
  return e;
}

Molecule parse_geometry(const std::string& text, LengthUnit unit, int charge) {
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == '/' || c == ';' || c == ',') c = '\n';
  }

  Molecule mol;
  mol.charge = charge;
  const double to_bohr = (unit == LengthUnit::angstrom) ? kAngstromToBohr : 1.0;

  std::istringstream lines(normalized);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string symbol;
    if (!(fields >> symbol)) continue;  // blank line
    Atom atom;
    atom.symbol = symbol;
    atom.z = element_z(symbol);
    double v[3];
    for (double& x : v) {
      require(static_cast<bool>(fields >> x), ErrorKind::parse,
              "malformed geometry line: '" + line + "'");
      require(std::isfinite(x), ErrorKind::parse,
              "non-finite coordinate in line: '" + line + "'");
    }
    std::string extra;
    require(!(fields >> extra), ErrorKind::parse,
            "trailing fields in geometry line: '" + line + "'");
    for (int k = 0; k < 3; ++k) atom.xyz[k] = v[k] * to_bohr;
    mol.atoms.push_back(atom);
  }

  require(!mol.atoms.empty(), ErrorKind::parse, "empty geometry input");

  int z_total = 0;
  for (const auto& a : mol.atoms) z_total += a.z;
  mol.n_electrons = z_total - charge;
  require(mol.n_electrons >= 0, ErrorKind::invalid_argument,
          "charge exceeds total nuclear charge");

  for (std::size_t a = 0; a < mol.atoms.size(); ++a) {
    for (std::size_t b = a + 1; b < mol.atoms.size(); ++b) {
      double r2 = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double d = mol.atoms[a].xyz[k] - mol.atoms[b].xyz[k];
        r2 += d * d;
      }
      require(r2 > 1e-12, ErrorKind::invalid_argument,
              "atoms " + std::to_string(a) + " and " + std::to_string(b) +
                  " coincide");
    }
  }
  return mol;
}

Molecule translated(const Molecule& mol, const std::array<double, 3>& shift) {
  Molecule out = mol;
  for (auto& atom : out.atoms)
    for (int k = 0; k < 3; ++k) atom.xyz[k] += shift[k];
  return out;
}

Molecule rotated(const Molecule& mol, const std::array<double, 9>& r) {
  Molecule out = mol;
  for (auto& atom : out.atoms) {
    const auto p = atom.xyz;
    for (int i = 0; i < 3; ++i)
      atom.xyz[i] = r[3 * i] * p[0] + r[3 * i + 1] * p[1] + r[3 * i + 2] * p[2];
  }
  return out;
}

}  // namespace sqdw
