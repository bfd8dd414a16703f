#pragma once

#include <string>
#include <vector>

#include "core/molecule.hpp"

namespace sqdw {

// Contracted Cartesian Gaussian shell. Coefficients are stored ready for the
// integral engine: primitive normalization and the overall contraction
// normalization are already folded in.
struct BasisShell {
  int atom = 0;             // index into Molecule::atoms
  int l = 0;                // 0 = s, 1 = p
  std::vector<double> exponents;     // strictly positive, descending
  std::vector<double> coefficients;  // same length
};

struct BasisSet {
  std::string name;
  int n_ao = 0;
  std::vector<BasisShell> shells;
  std::vector<int> shell_ao_offset;  // first AO index of each shell
  std::vector<int> ao_atom_map;      // AO index -> atom index
};

// Raw published element parameters before normalization.
struct ElementShellData {
  int l;
  std::vector<double> exponents;
  std::vector<double> coefficients;
};

// Tabulated parameters for `basis_name` ("sto-3g" or "6-31g", case-insensitive).
// Throws ErrorKind::unsupported when the element is not tabulated.
std::vector<ElementShellData> element_basis(const std::string& basis_name,
                                            const std::string& symbol);

BasisSet build_basis(const Molecule& mol, const std::string& basis_name);

// Self-overlap of a contracted shell as stored (should be 1 after build).
double shell_self_overlap(const BasisShell& shell);

}  // namespace sqdw
