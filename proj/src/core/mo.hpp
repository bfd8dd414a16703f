#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/integrals.hpp"

namespace sqdw {

// Second-quantized Hamiltonian in an orthonormal orbital basis:
//   H = e_core + sum h_pq p^+ q + 1/2 sum (pq|rs) p^+ r^+ s q
// with (pq|rs) in chemist notation, 8-fold symmetric, stored dense.
struct MOIntegrals {
  int n_orb = 0;
  Eigen::MatrixXd h;
  std::vector<double> eri;  // [p][q][r][s] row-major
  double e_core = 0.0;

  double g(int p, int q, int r, int s) const {
    return eri[((static_cast<std::size_t>(p) * n_orb + q) * n_orb + r) * n_orb + s];
  }
  double& g(int p, int q, int r, int s) {
    return eri[((static_cast<std::size_t>(p) * n_orb + q) * n_orb + r) * n_orb + s];
  }
};

// Transforms packed AO two-electron integrals into an orbital subset given by
// columns of C (n_ao x m) without materializing the full AO tensor.
std::vector<double> transform_eri(const PackedEri& ao_eri,
                                  const Eigen::MatrixXd& coeffs);

// Full-basis transformation h_pq = C^T hcore C, (pq|rs) quarter transforms,
// e_core = e_nuc. C columns must be S-orthonormal.
MOIntegrals ao_to_mo(const AOBundle& ao, const Eigen::MatrixXd& coeffs);

// Largest |(pq|rs) - permuted| over the 8 permutations; diagnostics and tests.
double eri_symmetry_violation(const MOIntegrals& mo);

}  // namespace sqdw
