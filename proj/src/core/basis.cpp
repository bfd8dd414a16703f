#include "core/basis.hpp"

#include <cmath>

#include "core/constants.hpp"
#include "core/error.hpp"

namespace sqdw {

namespace {

// Normalization of a Cartesian primitive x^l e^{-a r^2} (single-axis l <= 1).
double primitive_norm(double a, int l) {
  const double base = std::pow(2.0 * a / kPi, 0.75);
  return (l == 0) ? base : base * 2.0 * std::sqrt(a);
}

// Self-overlap of two same-center primitives carrying x^l, unit coefficients.
double primitive_pair_overlap(double a, double b, int l) {
  const double p = a + b;
  const double s = std::pow(kPi / p, 1.5);
  return (l == 0) ? s : s * 0.5 / p;
}

}  // namespace

double shell_self_overlap(const BasisShell& shell) {
  double s = 0.0;
  for (std::size_t i = 0; i < shell.exponents.size(); ++i)
    for (std::size_t j = 0; j < shell.exponents.size(); ++j)
      s += shell.coefficients[i] * shell.coefficients[j] *
           primitive_pair_overlap(shell.exponents[i], shell.exponents[j],
                                  shell.l);
  return s;
}

BasisSet build_basis(const Molecule& mol, const std::string& basis_name) {
  BasisSet basis;
  basis.name = basis_name;

  for (std::size_t atom = 0; atom < mol.atoms.size(); ++atom) {
    for (const auto& data : element_basis(basis_name, mol.atoms[atom].symbol)) {
      require(data.l <= 1, ErrorKind::unsupported,
              "angular momentum > 1 not supported");
      BasisShell shell;
      shell.atom = static_cast<int>(atom);
      shell.l = data.l;
      shell.exponents = data.exponents;
      shell.coefficients = data.coefficients;

      for (std::size_t i = 0; i < shell.exponents.size(); ++i) {
        require(shell.exponents[i] > 0.0, ErrorKind::invalid_argument,
                "non-positive exponent in basis data");
        if (i > 0)
          require(shell.exponents[i] < shell.exponents[i - 1],
                  ErrorKind::invalid_argument,
                  "exponents must be sorted descending");
        shell.coefficients[i] *= primitive_norm(shell.exponents[i], shell.l);
      }
      const double s = shell_self_overlap(shell);
      const double scale = 1.0 / std::sqrt(s);
      for (double& c : shell.coefficients) c *= scale;

      basis.shell_ao_offset.push_back(basis.n_ao);
      const int n_comp = (shell.l == 0) ? 1 : 3;
      for (int c = 0; c < n_comp; ++c)
        basis.ao_atom_map.push_back(static_cast<int>(atom));
      basis.n_ao += n_comp;
      basis.shells.push_back(std::move(shell));
    }
  }
  return basis;
}

}  // namespace sqdw
