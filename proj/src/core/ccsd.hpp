#pragma once

#include <Eigen/Dense>

#include "core/mo.hpp"
#include "core/mp2.hpp"
#include "core/rdm.hpp"

namespace sqdw {

struct CcsdOptions {
  int max_iter = 120;
  double amp_tol = 1e-8;  // max residual of the amplitude equations
  int diis_depth = 8;
};

struct CcsdResult {
  Amplitudes amplitudes;
  double e_total = 0.0;  // includes e_core
  double e_corr = 0.0;
  int n_iterations = 0;
  // residual over every singles/doubles projection, same-spin included
  double max_residual = 0.0;
};

// Closed-shell spin-orbital CCSD. The amplitude equations are the projections
// <mu| e^{-T} H e^{T} |Phi0> = 0 evaluated exactly in the determinant basis
// of the (n_occ, n_occ) sector; the restricted t1/t2 parameterization of
// `Amplitudes` carries the spin convention. MP2 supplies the initial guess.
CcsdResult ccsd_solve(const MOIntegrals& mo,
                      const Eigen::VectorXd& orbital_energies, int n_occ,
                      const CcsdOptions& options = {});

// Lambda equations + response 1-/2-RDMs (Hermitized), in the same conventions
// as compute_rdms, so E = sum h rdm1 + 1/2 sum g rdm2 reproduces e_corr.
RdmSet ccsd_rdms(const MOIntegrals& mo, const Eigen::VectorXd& orbital_energies,
                 int n_occ, const Amplitudes& amps,
                 const CcsdOptions& options = {});

}  // namespace sqdw
