#pragma once

#include <cstdint>
#include <vector>

#include "core/detspace.hpp"
#include "core/mo.hpp"

namespace sqdw {

// Sparse symmetric matrix with full rows stored (CSR).
struct SparseSym {
  std::size_t dim = 0;
  std::vector<std::size_t> row_ptr;
  std::vector<std::uint32_t> cols;
  std::vector<double> vals;
  std::vector<double> diagonal;

  void matvec(const double* x, double* y) const {
    for (std::size_t r = 0; r < dim; ++r) {
      double acc = 0.0;
      for (std::size_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
        acc += vals[k] * x[cols[k]];
      y[r] = acc;
    }
  }
};

// Electronic Hamiltonian projected onto `space` by the Slater-Condon rules;
// no e_core on the diagonal (added at reporting time).
SparseSym build_subspace_hamiltonian(const DetSpace& space,
                                     const MOIntegrals& mo);

// Single matrix element <bra|H|ket> by the same rules (tests, spot checks).
double slater_condon_element(const Determinant& bra, const Determinant& ket,
                             int n_orb, const MOIntegrals& mo);

}  // namespace sqdw
