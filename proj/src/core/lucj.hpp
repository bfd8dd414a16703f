#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/circuit.hpp"
#include "core/mp2.hpp"
#include "core/statevector.hpp"

namespace sqdw {

// One repetition layer of the unitary cluster-Jastrow state
//   U = prod_mu exp(T_mu) exp(i J_mu) exp(-T_mu),
// T anti-Hermitian and spin-shared, J real symmetric over orbital pairs with
// spin blocks (aa, bb, ab).
struct LucjLayer {
  Eigen::MatrixXcd t_generator;   // anti-Hermitian; exp(T) is the rotation
  Eigen::MatrixXd j_aa, j_bb, j_ab;
};

struct LucjParams {
  int n_orb = 0;
  std::vector<LucjLayer> layers;  // applied first layer first
};

// Double-factorized construction from restricted t2 amplitudes: reshape t2
// into the (occ*virt) x (occ*virt) matrix, eigendecompose, and map each of
// the n_reps leading eigenpairs to one (T, J) layer. t1 is accepted for
// interface parity with amplitude producers but does not enter the layers.
LucjParams lucj_params_from_t2(const Amplitudes& amps, int n_orb,
                               int n_reps = 1);

Statevector prepare_lucj_state(int n_orb, int n_alpha, int n_beta,
                               const LucjParams& params);

// Diagonal Jastrow phase table over all basis states of 2*n_orb qubits.
std::vector<double> jastrow_phase_table(int n_orb, const LucjLayer& layer);

// Gate-level circuit equivalent to prepare_lucj_state (resource estimation
// and noise trajectories); noiseless sampling distributions agree exactly.
CircuitDesc lucj_circuit(int n_orb, int n_alpha, int n_beta,
                         const LucjParams& params);

// Number of free real parameters in the layer parameterization.
int lucj_parameter_count(const LucjParams& params);

}  // namespace sqdw
