#pragma once

// Independent oracles used by unit and acceptance tests. These deliberately
// avoid the Slater-Condon case analysis in the library: all matrix elements
// come from explicit second-quantized operator application (Jordan-Wigner
// sign bookkeeping on occupation masks), or from literal Pauli-string tensor
// products for the smallest systems.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "core/detspace.hpp"
#include "core/mo.hpp"

namespace sqdw::testing {

// <bra|H|ket> over an explicit determinant space via brute-force operator
// application of every h_pq and (pq|rs) term.
Eigen::MatrixXd jw_sector_hamiltonian(const DetSpace& space,
                                      const MOIntegrals& mo);

// Full 4^... dense Hamiltonian over all 2^(2 n_orb) basis states built from
// literal Pauli-string tensor products of the Jordan-Wigner transformed
// Hamiltonian. Practical only up to ~10 qubits; returns the matrix in basis
// index order (see determinant_to_basis_index).
Eigen::MatrixXcd pauli_full_hamiltonian(const MOIntegrals& mo);

// Dense s-function overlap between two contracted s-type Gaussians by the
// closed-form Gaussian product rule (independent of McMurchie-Davidson).
double contracted_s_overlap(const std::vector<double>& exps_a,
                            const std::vector<double>& coefs_a,
                            const std::vector<double>& exps_b,
                            const std::vector<double>& coefs_b,
                            double distance_bohr);

// Amplitudes of the orbital rotation applied to a determinant via minors:
// <D'|Gamma(U)|D> = det U[occ(D'), occ(D)] per spin sector.
std::complex<double> rotation_amplitude_minor(const Eigen::MatrixXcd& u,
                                              std::uint32_t occ_bra,
                                              std::uint32_t occ_ket);

}  // namespace sqdw::testing
