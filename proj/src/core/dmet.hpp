#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "core/integrals.hpp"
#include "core/mo.hpp"
#include "core/molecule.hpp"
#include "core/rdm.hpp"
#include "core/sampler.hpp"
#include "core/scf.hpp"
#include "core/sqd.hpp"

namespace sqdw {

// Atom-index groups; must partition the molecule. AO lists follow from the
// basis through ao_atom_map.
struct Fragmentation {
  std::vector<std::vector<int>> atom_groups;
  std::string scheme = "explicit";

  static Fragmentation one_atom_per_fragment(const Molecule& mol);
};

enum class ImpuritySolver { casci, ccsd, sqd };

struct DmetOptions {
  ImpuritySolver solver = ImpuritySolver::casci;
  long shots = 10000;          // SQD sampler budget per fragment
  double eps_s = 1e5;          // SQD samples-per-batch (non-binding default)
  int sqd_iterations = 10;
  double mu_tol = 1e-8;        // on the summed fragment electron count
  int max_outer = 30;
  int k_occ = 4;               // active-space truncation (HOMO side)
  int k_vir = 4;               // (LUMO side)
  NoiseModel sampler_noise;    // hardware stand-in for the SQD sampler
  std::uint64_t seed = 0;
  ScfOptions scf;
};

// Fragment + Schmidt bath in the Loewdin-orthogonalized AO basis, with the
// impurity Hamiltonian pieces that do not depend on the chemical potential.
struct EmbeddingProblem {
  int fragment_id = 0;
  std::vector<int> fragment_aos;           // global AO indices
  Eigen::MatrixXd orbitals_lowdin;         // n_ao x n_emb, fragment cols first
  int n_bath = 0;
  int n_imp_electrons = 0;
  Eigen::MatrixXd h_bare;                  // embedding-basis core Hamiltonian
  Eigen::MatrixXd v_core;                  // frozen-environment Coulomb/exchange
  std::vector<double> eri;                 // embedding-basis (pq|rs), dense
};

struct FragmentOutcome {
  int fragment_id = 0;
  double e_frag = 0.0;
  double n_electrons = 0.0;  // trace of the embedded 1-RDM over fragment AOs
  double eta_sub = 1.0;      // SQD solver only
  int n_orb_act = 0;
  int n_ele_act = 0;
};

struct DmetIterationRecord {
  double mu = 0.0;
  double n_error = 0.0;
  double e_total = 0.0;
  std::vector<FragmentOutcome> fragments;
};

struct DMETResult {
  double e_total = 0.0;
  bool converged = false;
  int n_iterations = 0;  // chemical-potential evaluations
  double mu_final = 0.0;
  std::vector<DmetIterationRecord> trace;
  std::string solver_label;
};

// Schmidt bath from the RHF density for one fragment (mu-independent parts).
EmbeddingProblem build_bath(const RHFResult& rhf, const AOBundle& ao,
                            const std::vector<int>& fragment_aos,
                            double delta = 1e-8);

// Impurity Hamiltonian at a given chemical potential: h = h_bare + v_core
// - mu on the fragment diagonal; e_core carries no global terms here.
MOIntegrals impurity_hamiltonian(const EmbeddingProblem& emb, double mu);

// 4-HOMO/4-LUMO truncation inside the impurity; pass-through when the
// impurity already fits. Returns the active-space Hamiltonian, the selected
// canonical columns (impurity basis) and the frozen-occupied density.
struct ActiveSpace {
  MOIntegrals mo;                 // active-space Hamiltonian (e_core = 0)
  Eigen::MatrixXd coeffs;         // n_imp x n_act canonical columns
  Eigen::MatrixXd frozen_density; // n_imp x n_imp
  Eigen::VectorXd eps;            // active orbital energies
  int n_ele_act = 0;
};
ActiveSpace truncate_active_space(const EmbeddingProblem& emb, double mu,
                                  int k_occ, int k_vir, const ScfOptions& scf);

// Democratic fragment energy: one-body through h_bare + v_core / 2, two-body
// through the embedding-basis integrals, first index on the fragment.
double fragment_energy(const EmbeddingProblem& emb,
                       const Eigen::MatrixXd& rdm1_imp,
                       const std::vector<double>& rdm2_imp);

DMETResult run_dmet(const Molecule& mol, const std::string& basis,
                    const Fragmentation& frag, const DmetOptions& opt);

}  // namespace sqdw
