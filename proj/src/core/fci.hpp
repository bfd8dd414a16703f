#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/davidson.hpp"
#include "core/detspace.hpp"
#include "core/mo.hpp"
#include "core/rdm.hpp"

namespace sqdw {

struct SpectralResult {
  double e0 = 0.0;  // electronic, no e_core
  std::vector<double> ground_vector;
  int davidson_cycles = 0;
  Eigen::MatrixXd rdm1;
  std::vector<double> rdm2;
  Eigen::VectorXd avg_occupancy;  // 2 n_orb spin-orbital occupations
  double s2 = 0.0;
};

// Lowest state of the projected Hamiltonian over an explicit subspace.
SpectralResult solve_subspace(const DetSpace& space, const MOIntegrals& mo,
                              const DavidsonOptions& opt = {},
                              bool with_rdm2 = true);

// FCI: the full-symmetry-space special case. Total energy is e0 + mo.e_core.
SpectralResult fci_ground_state(const MOIntegrals& mo, int n_alpha, int n_beta,
                                const DavidsonOptions& opt = {},
                                bool with_rdm2 = true);

inline double fci_total_energy(const MOIntegrals& mo, int n_alpha, int n_beta) {
  return fci_ground_state(mo, n_alpha, n_beta, {}, false).e0 + mo.e_core;
}

}  // namespace sqdw
