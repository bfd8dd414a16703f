#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/mo.hpp"

namespace sqdw {

// Excitation amplitudes in the restricted spatial-orbital convention.
//
// t2(i, j, a, b) is the opposite-spin amplitude t_{i-alpha j-beta}^{a-alpha
// b-beta}; indices i, j run over occupied and a, b over virtual spatial
// orbitals. Same-spin amplitudes are derived, never stored:
//   t_ss(i, j, a, b) = t2(i, j, a, b) - t2(i, j, b, a).
// This is the single place that owns the spin convention; consumers go
// through t2_os / t2_ss.
struct Amplitudes {
  enum class Source { mp2, ccsd };
  int n_occ = 0;
  int n_virt = 0;
  Eigen::MatrixXd t1;       // n_occ x n_virt
  std::vector<double> t2;   // [i][j][a][b]
  Source source = Source::mp2;

  double t2_os(int i, int j, int a, int b) const {
    return t2[((static_cast<std::size_t>(i) * n_occ + j) * n_virt + a) * n_virt + b];
  }
  double& t2_ref(int i, int j, int a, int b) {
    return t2[((static_cast<std::size_t>(i) * n_occ + j) * n_virt + a) * n_virt + b];
  }
  double t2_ss(int i, int j, int a, int b) const {
    return t2_os(i, j, a, b) - t2_os(i, j, b, a);
  }
};

struct Mp2Result {
  Amplitudes amplitudes;
  double e_mp2 = 0.0;  // correlation energy only
};

Mp2Result mp2_amplitudes(const MOIntegrals& mo,
                         const Eigen::VectorXd& orbital_energies, int n_occ);

}  // namespace sqdw
