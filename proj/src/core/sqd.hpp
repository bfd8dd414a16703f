#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "core/detspace.hpp"
#include "core/fci.hpp"
#include "core/mo.hpp"
#include "core/sampler.hpp"

namespace sqdw {

struct SQDConfig {
  int max_iterations = 10;          // configuration-recovery loop length
  double samples_per_batch = 1e8;   // eps_s; effectively no subsampling
  bool eps_sqrt_rule = false;       // eps_s = round(sqrt(|S|)) instead
  int n_batches = 1;
  int davidson_max_cycles = 200;
  std::uint64_t seed = 0;
};

struct SQDDims {
  long s_samp = 0;     // unique raw bitstrings
  long s_postcr = 0;   // unique compliant bitstrings after recovery
  long s_sub = 0;      // diagonalization subspace dimension
  long s_sym = 0;      // symmetry sector size
  double hilbert = 0;  // 2^(2 n_orb)
};

struct SQDResult {
  double e_sqd = 0.0;  // min over iterations and batches, includes e_core
  std::vector<double> energy_history;  // per iteration, batch-minimum
  SQDDims dims;                        // final iteration
  double eta_sym = 0.0, eta_postcr = 0.0, eta_sub = 0.0;
  Eigen::VectorXd final_occupancy;     // 2 n_orb, averaged over final batches
  double s2 = 0.0;
  int iterations_run = 0;
  // solver output behind e_sqd, for downstream density consumers
  SpectralResult best;
  DetSpace best_space;
};

// Raw measurement arrays: unique bitstring words with empirical probability.
struct BitstringArrays {
  int n_orb = 0;
  std::vector<std::uint64_t> words;
  std::vector<double> probs;
};

BitstringArrays counts_to_arrays(const Counts& counts, int n_orb);

// Probabilistic repair of symmetry-violating rows toward the average
// occupancy vector (layout [alpha 0..n-1, beta 0..n-1]); compliant rows pass
// through unchanged. Deterministic given the seed.
BitstringArrays recover_configurations(const BitstringArrays& raw,
                                       const Eigen::VectorXd& avg_occupancy,
                                       int n_alpha, int n_beta,
                                       std::uint64_t seed);

// Hamming-weight filtering, probability-weighted subsampling without
// replacement, and proliferation of pooled half-strings into batch spaces.
// Throws ErrorKind::empty_sector when no compliant row survives.
std::vector<DetSpace> postselect_and_subsample(const BitstringArrays& rows,
                                               int n_alpha, int n_beta,
                                               double eps_s, int n_batches,
                                               std::uint64_t seed,
                                               long* unique_compliant = nullptr);

// Projected-Hamiltonian eigensolve over one batch (energies electronic; the
// caller adds e_core).
SpectralResult solve_fermion(const DetSpace& batch, const MOIntegrals& mo,
                             int davidson_max_cycles);

SQDResult run_sqd(const Counts& counts, const MOIntegrals& mo, int n_alpha,
                  int n_beta, const SQDConfig& cfg);

struct SpaceRatios {
  double eta_sym, eta_postcr, eta_sub;
};
SpaceRatios space_metrics(const SQDDims& dims);

}  // namespace sqdw
