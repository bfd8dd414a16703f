#include "core/dmet.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "core/ccsd.hpp"
#include "core/error.hpp"
#include "core/fci.hpp"
#include "core/lucj.hpp"
#include "core/rng.hpp"

namespace sqdw {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

PackedEri pack_dense_eri(const std::vector<double>& eri, int n) {
  PackedEri packed(n);
  auto g = [&](int p, int q, int r, int s) {
    return eri[((static_cast<std::size_t>(p) * n + q) * n + r) * n + s];
  };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= r; ++s) {
          if (PackedEri::pair_index(p, q) < PackedEri::pair_index(r, s)) continue;
          packed.at(p, q, r, s) = g(p, q, r, s);
        }
  return packed;
}

// J/K of a symmetric density against a dense (pq|rs) tensor.
void dense_coulomb_exchange(const std::vector<double>& eri, int n,
                            const MatrixXd& density, MatrixXd& coulomb,
                            MatrixXd& exchange) {
  coulomb = MatrixXd::Zero(n, n);
  exchange = MatrixXd::Zero(n, n);
  auto g = [&](int p, int q, int r, int s) {
    return eri[((static_cast<std::size_t>(p) * n + q) * n + r) * n + s];
  };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      double j = 0.0, k = 0.0;
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          j += g(p, q, r, s) * density(r, s);
          k += g(p, r, q, s) * density(r, s);
        }
      coulomb(p, q) = j;
      exchange(p, q) = k;
    }
}

// subset transform of a dense tensor: (tu|vw) over columns of c
std::vector<double> transform_dense_eri(const std::vector<double>& eri, int n,
                                        const MatrixXd& c) {
  return transform_eri(pack_dense_eri(eri, n), c);
}

struct FragmentSolveResult {
  MatrixXd rdm1_imp;
  std::vector<double> rdm2_imp;
  double eta_sub = 1.0;
  int n_orb_act = 0;
  int n_ele_act = 0;
};

FragmentSolveResult solve_fragment(const EmbeddingProblem& emb, double mu,
                                   const DmetOptions& opt,
                                   std::uint64_t fragment_seed) {
  const int m = static_cast<int>(emb.h_bare.rows());
  ActiveSpace act = truncate_active_space(emb, mu, opt.k_occ, opt.k_vir, opt.scf);
  const int na = act.n_ele_act / 2;
  const int n_act = act.mo.n_orb;

  RdmSet rdms;
  double eta_sub = 1.0;
  switch (opt.solver) {
    case ImpuritySolver::casci: {
      SpectralResult fci = fci_ground_state(act.mo, na, na);
      rdms.rdm1 = std::move(fci.rdm1);
      rdms.rdm2 = std::move(fci.rdm2);
      break;
    }
    case ImpuritySolver::ccsd: {
      CcsdResult cc = ccsd_solve(act.mo, act.eps, na);
      rdms = ccsd_rdms(act.mo, act.eps, na, cc.amplitudes);
      break;
    }
    case ImpuritySolver::sqd: {
      CcsdResult cc = ccsd_solve(act.mo, act.eps, na);
      LucjParams lucj = lucj_params_from_t2(cc.amplitudes, n_act, 1);
      Statevector state = prepare_lucj_state(n_act, na, na, lucj);
      Counts counts = sample_counts(state, opt.shots,
                                    hash_seed(fragment_seed, 0xAB), opt.sampler_noise);
      SQDConfig cfg;
      cfg.max_iterations = opt.sqd_iterations;
      cfg.samples_per_batch = opt.eps_s;
      cfg.seed = hash_seed(fragment_seed, 0xCD);
      SQDResult sqd = run_sqd(counts, act.mo, na, na, cfg);
      eta_sub = sqd.eta_sub;
      RdmSet best = compute_rdms(sqd.best_space, sqd.best.ground_vector, true);
      rdms.rdm1 = std::move(best.rdm1);
      rdms.rdm2 = std::move(best.rdm2);
      break;
    }
  }

  // pad the active-space densities back into the impurity basis
  FragmentSolveResult out;
  out.eta_sub = eta_sub;
  out.n_orb_act = n_act;
  out.n_ele_act = act.n_ele_act;

  const MatrixXd& cs = act.coeffs;
  const MatrixXd d_active = cs * rdms.rdm1 * cs.transpose();
  const MatrixXd& d_frozen = act.frozen_density;
  out.rdm1_imp = d_active + d_frozen;

  // two-body: transform the active block, then add the mean-field closure
  // for frozen-frozen and frozen-active pairs
  out.rdm2_imp.assign(static_cast<std::size_t>(m) * m * m * m, 0.0);
  {
    // quarter transforms of rdm2_act (n_act^4 -> m^4)
    const int a = n_act;
    std::vector<double> t1(static_cast<std::size_t>(m) * a * a * a, 0.0);
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < a; ++q)
        for (int r = 0; r < a; ++r)
          for (int s = 0; s < a; ++s) {
            double acc = 0.0;
            for (int t = 0; t < a; ++t)
              acc += cs(p, t) *
                     rdms.rdm2[((static_cast<std::size_t>(t) * a + q) * a + r) * a + s];
            t1[((static_cast<std::size_t>(p) * a + q) * a + r) * a + s] = acc;
          }
    std::vector<double> t2(static_cast<std::size_t>(m) * m * a * a, 0.0);
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q)
        for (int r = 0; r < a; ++r)
          for (int s = 0; s < a; ++s) {
            double acc = 0.0;
            for (int t = 0; t < a; ++t)
              acc += cs(q, t) *
                     t1[((static_cast<std::size_t>(p) * a + t) * a + r) * a + s];
            t2[((static_cast<std::size_t>(p) * m + q) * a + r) * a + s] = acc;
          }
    std::vector<double> t3(static_cast<std::size_t>(m) * m * m * a, 0.0);
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q)
        for (int r = 0; r < m; ++r)
          for (int s = 0; s < a; ++s) {
            double acc = 0.0;
            for (int t = 0; t < a; ++t)
              acc += cs(r, t) *
                     t2[((static_cast<std::size_t>(p) * m + q) * a + t) * a + s];
            t3[((static_cast<std::size_t>(p) * m + q) * m + r) * a + s] = acc;
          }
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q)
        for (int r = 0; r < m; ++r)
          for (int s = 0; s < m; ++s) {
            double acc = 0.0;
            for (int t = 0; t < a; ++t)
              acc += cs(s, t) *
                     t3[((static_cast<std::size_t>(p) * m + q) * m + r) * a + t];
            out.rdm2_imp[((static_cast<std::size_t>(p) * m + q) * m + r) * m + s] = acc;
          }
  }
  auto idx = [m](int p, int q, int r, int s) {
    return ((static_cast<std::size_t>(p) * m + q) * m + r) * m + s;
  };
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
          const double df_pq = d_frozen(p, q), df_ps = d_frozen(p, s);
          const double da_rs = d_active(r, s), da_rq = d_active(r, q);
          out.rdm2_imp[idx(p, q, r, s)] +=
              df_pq * d_frozen(r, s) - 0.5 * df_ps * d_frozen(r, q) +
              df_pq * da_rs + d_active(p, q) * d_frozen(r, s) -
              0.5 * (df_ps * da_rq + d_active(p, s) * d_frozen(r, q));
        }
  return out;
}

}  // namespace

Fragmentation Fragmentation::one_atom_per_fragment(const Molecule& mol) {
  Fragmentation f;
  f.scheme = "one-atom-per-fragment";
  for (std::size_t a = 0; a < mol.atoms.size(); ++a)
    f.atom_groups.push_back({static_cast<int>(a)});
  return f;
}

EmbeddingProblem build_bath(const RHFResult& rhf, const AOBundle& ao,
                            const std::vector<int>& fragment_aos,
                            double delta) {
  require(rhf.converged, ErrorKind::invalid_argument,
          "bath construction requires a converged SCF");
  require(!fragment_aos.empty(), ErrorKind::invalid_argument, "empty fragment");
  const int n = ao.n_ao;

  Eigen::SelfAdjointEigenSolver<MatrixXd> es(ao.S);
  const MatrixXd s_half = es.operatorSqrt();
  const MatrixXd d_lowdin = s_half * rhf.density * s_half;

  std::vector<int> env;
  std::set<int> frag_set(fragment_aos.begin(), fragment_aos.end());
  for (int i = 0; i < n; ++i)
    if (!frag_set.count(i)) env.push_back(i);
  const int ne = static_cast<int>(env.size());
  const int nf = static_cast<int>(fragment_aos.size());

  EmbeddingProblem emb;
  emb.fragment_aos = fragment_aos;

  MatrixXd bath_cols(n, 0);
  MatrixXd core_density_lowdin = MatrixXd::Zero(n, n);
  if (ne > 0) {
    MatrixXd env_block(ne, ne);
    for (int i = 0; i < ne; ++i)
      for (int j = 0; j < ne; ++j) env_block(i, j) = d_lowdin(env[i], env[j]);
    Eigen::SelfAdjointEigenSolver<MatrixXd> env_es(env_block);

    // Bath orbitals carry fractional occupation; idempotency caps their
    // number at the fragment size. Rank by distance from {0, 2} so that
    // numerical stragglers right at the threshold cannot oversubscribe.
    std::vector<int> order(ne);
    for (int k = 0; k < ne; ++k) order[k] = k;
    auto score = [&](int k) {
      const double occ = env_es.eigenvalues()(k);
      return std::min(occ, 2.0 - occ);
    };
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return score(x) > score(y); });

    std::vector<int> bath_idx;
    std::vector<char> is_bath(ne, 0);
    for (int k : order) {
      if (static_cast<int>(bath_idx.size()) >= nf) break;
      if (score(k) <= delta) break;
      bath_idx.push_back(k);
      is_bath[k] = 1;
    }
    for (int k = 0; k < ne; ++k) {
      if (is_bath[k] || env_es.eigenvalues()(k) < 1.0) continue;
      // fully occupied environment orbital: frozen core
      VectorXd v = VectorXd::Zero(n);
      for (int i = 0; i < ne; ++i) v(env[i]) = env_es.eigenvectors()(i, k);
      core_density_lowdin += 2.0 * v * v.transpose();
    }
    bath_cols = MatrixXd::Zero(n, static_cast<int>(bath_idx.size()));
    for (std::size_t c = 0; c < bath_idx.size(); ++c)
      for (int i = 0; i < ne; ++i)
        bath_cols(env[i], static_cast<int>(c)) =
            env_es.eigenvectors()(i, bath_idx[c]);
  }

  emb.n_bath = static_cast<int>(bath_cols.cols());
  const int n_emb = nf + emb.n_bath;
  emb.orbitals_lowdin = MatrixXd::Zero(n, n_emb);
  for (int c = 0; c < nf; ++c) emb.orbitals_lowdin(fragment_aos[c], c) = 1.0;
  emb.orbitals_lowdin.rightCols(emb.n_bath) = bath_cols;

  // electron count of the embedded block
  const MatrixXd d_emb =
      emb.orbitals_lowdin.transpose() * d_lowdin * emb.orbitals_lowdin;
  const double tr = d_emb.trace();
  const long rounded = std::lround(tr);
  require(std::abs(tr - rounded) < 1e-3, ErrorKind::internal,
          "embedded electron count far from an integer: bath inconsistency");
  require(rounded % 2 == 0, ErrorKind::internal,
          "embedded electron count is odd: bath inconsistency");
  emb.n_imp_electrons = static_cast<int>(rounded);

  // mu-independent Hamiltonian pieces
  const MatrixXd x = es.operatorInverseSqrt();
  const MatrixXd c_ao = x * emb.orbitals_lowdin;
  emb.h_bare = c_ao.transpose() * ao.hcore * c_ao;
  const MatrixXd core_ao = x * core_density_lowdin * x;
  MatrixXd j, k;
  coulomb_exchange(ao.eri, core_ao, j, k);
  emb.v_core = c_ao.transpose() * (j - 0.5 * k) * c_ao;
  emb.eri = transform_eri(ao.eri, c_ao);
  return emb;
}

MOIntegrals impurity_hamiltonian(const EmbeddingProblem& emb, double mu) {
  MOIntegrals mo;
  mo.n_orb = static_cast<int>(emb.h_bare.rows());
  mo.h = emb.h_bare + emb.v_core;
  for (std::size_t i = 0; i < emb.fragment_aos.size(); ++i)
    mo.h(static_cast<int>(i), static_cast<int>(i)) -= mu;
  mo.eri = emb.eri;
  mo.e_core = 0.0;
  return mo;
}

ActiveSpace truncate_active_space(const EmbeddingProblem& emb, double mu,
                                  int k_occ, int k_vir, const ScfOptions& scf) {
  const MOIntegrals imp = impurity_hamiltonian(emb, mu);
  const int m = imp.n_orb;
  ActiveSpace act;

  RHFResult ihf = run_rhf_orthonormal(imp.h, pack_dense_eri(imp.eri, m),
                                      emb.n_imp_electrons, scf);
  const int n_occ = emb.n_imp_electrons / 2;
  const int n_vir = m - n_occ;

  if (m <= k_occ + k_vir) {
    // no truncation, but still hand the solver a canonical basis
    act.mo.n_orb = m;
    act.mo.h = ihf.mo_coeffs.transpose() * imp.h * ihf.mo_coeffs;
    act.mo.eri = transform_dense_eri(imp.eri, m, ihf.mo_coeffs);
    act.mo.e_core = 0.0;
    act.coeffs = ihf.mo_coeffs;
    act.frozen_density = MatrixXd::Zero(m, m);
    act.eps = ihf.orbital_energies;
    act.n_ele_act = emb.n_imp_electrons;
    return act;
  }

  const int keep_occ = std::min(k_occ, n_occ);
  const int keep_vir = std::min(k_vir, n_vir);
  const int n_frozen = n_occ - keep_occ;
  const int n_act = keep_occ + keep_vir;

  MatrixXd c_sel(m, n_act);
  c_sel.leftCols(keep_occ) = ihf.mo_coeffs.middleCols(n_frozen, keep_occ);
  c_sel.rightCols(keep_vir) = ihf.mo_coeffs.middleCols(n_occ, keep_vir);
  const MatrixXd c_frozen = ihf.mo_coeffs.leftCols(n_frozen);
  const MatrixXd d_frozen = 2.0 * c_frozen * c_frozen.transpose();

  MatrixXd j, k;
  dense_coulomb_exchange(imp.eri, m, d_frozen, j, k);
  act.mo.n_orb = n_act;
  act.mo.h = c_sel.transpose() * (imp.h + j - 0.5 * k) * c_sel;
  act.mo.eri = transform_dense_eri(imp.eri, m, c_sel);
  act.mo.e_core = 0.0;
  act.coeffs = c_sel;
  act.frozen_density = d_frozen;
  act.eps = VectorXd(n_act);
  act.eps.head(keep_occ) = ihf.orbital_energies.segment(n_frozen, keep_occ);
  act.eps.tail(keep_vir) = ihf.orbital_energies.segment(n_occ, keep_vir);
  act.n_ele_act = emb.n_imp_electrons - 2 * n_frozen;
  return act;
}

double fragment_energy(const EmbeddingProblem& emb, const MatrixXd& rdm1_imp,
                       const std::vector<double>& rdm2_imp) {
  const int m = static_cast<int>(emb.h_bare.rows());
  const int nf = static_cast<int>(emb.fragment_aos.size());
  const MatrixXd h_energy = emb.h_bare + 0.5 * emb.v_core;

  double e = 0.0;
  for (int i = 0; i < nf; ++i)
    for (int q = 0; q < m; ++q) e += rdm1_imp(i, q) * h_energy(i, q);

  auto g = [&](int p, int q, int r, int s) {
    return emb.eri[((static_cast<std::size_t>(p) * m + q) * m + r) * m + s];
  };
  auto d2 = [&](int p, int q, int r, int s) {
    return rdm2_imp[((static_cast<std::size_t>(p) * m + q) * m + r) * m + s];
  };
  double e2 = 0.0;
  for (int i = 0; i < nf; ++i)
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) e2 += d2(i, q, r, s) * g(i, q, r, s);
  return e + 0.5 * e2;
}

DMETResult run_dmet(const Molecule& mol, const std::string& basis,
                    const Fragmentation& frag, const DmetOptions& opt) {
  require(mol.n_electrons % 2 == 0, ErrorKind::invalid_argument,
          "DMET driver handles closed-shell molecules");

  // fragments must partition the atom list
  {
    std::vector<int> seen(mol.atoms.size(), 0);
    for (const auto& group : frag.atom_groups)
      for (int a : group) {
        require(a >= 0 && a < static_cast<int>(mol.atoms.size()),
                ErrorKind::invalid_argument, "fragment atom index out of range");
        ++seen[a];
      }
    for (std::size_t a = 0; a < seen.size(); ++a)
      require(seen[a] == 1, ErrorKind::invalid_argument,
              "fragments must cover every atom exactly once");
  }

  AOBundle ao = compute_ao_integrals(mol, basis);
  RHFResult rhf = run_rhf(ao, mol.n_electrons, opt.scf);

  std::vector<EmbeddingProblem> problems;
  for (std::size_t f = 0; f < frag.atom_groups.size(); ++f) {
    std::vector<int> aos;
    std::set<int> atoms(frag.atom_groups[f].begin(), frag.atom_groups[f].end());
    for (int i = 0; i < ao.n_ao; ++i)
      if (atoms.count(ao.ao_atom_map[i])) aos.push_back(i);
    EmbeddingProblem emb = build_bath(rhf, ao, aos);
    emb.fragment_id = static_cast<int>(f);
    problems.push_back(std::move(emb));
  }

  DMETResult res;
  switch (opt.solver) {
    case ImpuritySolver::casci: res.solver_label = "casci"; break;
    case ImpuritySolver::ccsd: res.solver_label = "ccsd"; break;
    case ImpuritySolver::sqd: res.solver_label = "sqd"; break;
  }

  auto evaluate = [&](double mu) {
    DmetIterationRecord rec;
    rec.mu = mu;
    double n_total = 0.0, e_total = ao.e_nuc;
    for (const auto& emb : problems) {
      FragmentSolveResult sol = solve_fragment(
          emb, mu, opt, hash_seed(opt.seed, emb.fragment_id, res.trace.size()));
      FragmentOutcome out;
      out.fragment_id = emb.fragment_id;
      out.e_frag = fragment_energy(emb, sol.rdm1_imp, sol.rdm2_imp);
      double nfrag = 0.0;
      for (std::size_t i = 0; i < emb.fragment_aos.size(); ++i)
        nfrag += sol.rdm1_imp(static_cast<int>(i), static_cast<int>(i));
      out.n_electrons = nfrag;
      out.eta_sub = sol.eta_sub;
      out.n_orb_act = sol.n_orb_act;
      out.n_ele_act = sol.n_ele_act;
      rec.fragments.push_back(out);
      n_total += nfrag;
      e_total += out.e_frag;
    }
    rec.n_error = n_total - mol.n_electrons;
    rec.e_total = e_total;
    res.trace.push_back(rec);
    return rec;
  };

  // secant root finding on the electron-count mismatch, bracket expansion by
  // +-0.1 Ha when the secant step misbehaves
  double mu0 = 0.0;
  DmetIterationRecord r0 = evaluate(mu0);
  double f0 = r0.n_error;
  if (std::abs(f0) < opt.mu_tol) {
    res.converged = true;
    res.e_total = r0.e_total;
    res.mu_final = mu0;
    res.n_iterations = static_cast<int>(res.trace.size());
    return res;
  }

  double mu1 = (f0 > 0) ? -0.1 : 0.1;
  DmetIterationRecord r1 = evaluate(mu1);
  double f1 = r1.n_error;

  while (static_cast<int>(res.trace.size()) < opt.max_outer) {
    if (std::abs(f1) < opt.mu_tol) {
      res.converged = true;
      res.e_total = r1.e_total;
      res.mu_final = mu1;
      res.n_iterations = static_cast<int>(res.trace.size());
      return res;
    }
    double mu2;
    if (std::abs(f1 - f0) > 1e-14) {
      mu2 = mu1 - f1 * (mu1 - mu0) / (f1 - f0);
      // keep the step sane; expand the bracket if the model misfires
      if (!std::isfinite(mu2) || std::abs(mu2 - mu1) > 1.0)
        mu2 = mu1 + ((f1 > 0) ? -0.1 : 0.1);
    } else {
      mu2 = mu1 + ((f1 > 0) ? -0.1 : 0.1);
    }
    if (std::abs(mu2 - mu1) < 1e-10) {
      res.converged = true;  // mu step collapsed; accept the current point
      res.e_total = r1.e_total;
      res.mu_final = mu1;
      res.n_iterations = static_cast<int>(res.trace.size());
      return res;
    }
    mu0 = mu1;
    f0 = f1;
    mu1 = mu2;
    r1 = evaluate(mu1);
    f1 = r1.n_error;
  }
  std::ostringstream msg;
  msg << "DMET chemical potential not converged after " << opt.max_outer
      << " evaluations (|dN| = " << std::abs(f1) << ")";
  fail(ErrorKind::not_converged, msg.str());
}

}  // namespace sqdw
