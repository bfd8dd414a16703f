#pragma once

#include <Eigen/Dense>

#include "core/integrals.hpp"

namespace sqdw {

struct ScfOptions {
  int max_iter = 200;
  double conv_tol = 1e-9;      // on max |FDS - SDF|
  double level_shift = 0.2;    // applied to the first level_shift_iters
  int level_shift_iters = 3;
  int diis_depth = 8;
};

struct RHFResult {
  Eigen::MatrixXd mo_coeffs;        // n_ao x n_orb
  Eigen::VectorXd orbital_energies;
  Eigen::MatrixXd density;          // spin-summed, 2 C_occ C_occ^T
  double e_total = 0.0;             // includes nuclear repulsion
  int n_occ = 0;
  bool converged = false;
  int n_iterations = 0;
};

// Closed-shell Roothaan SCF with DIIS. Throws ErrorKind::not_converged with
// the last energy in the message if max_iter is exhausted.
RHFResult run_rhf(const AOBundle& ao, int n_electrons,
                  const ScfOptions& options = {});

// Generalized RHF driver reused by the DMET impurity solver: works on an
// explicit (h, eri, S=I) problem in an orthonormal orbital basis.
RHFResult run_rhf_orthonormal(const Eigen::MatrixXd& h, const PackedEri& eri,
                              int n_electrons, const ScfOptions& options = {});

}  // namespace sqdw
