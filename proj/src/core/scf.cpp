#include "core/scf.hpp"

#include <cmath>
#include <deque>
#include <functional>
#include <sstream>

#include "core/error.hpp"
#include "core/mo.hpp"

namespace sqdw {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct DiisState {
  std::deque<MatrixXd> focks;
  std::deque<MatrixXd> errors;
  int depth;

  explicit DiisState(int d) : depth(d) {}

  MatrixXd extrapolate(const MatrixXd& fock, const MatrixXd& error) {
    focks.push_back(fock);
    errors.push_back(error);
    if (static_cast<int>(focks.size()) > depth) {
      focks.pop_front();
      errors.pop_front();
    }
    const int k = static_cast<int>(focks.size());
    if (k < 2) return fock;

    MatrixXd B = MatrixXd::Zero(k + 1, k + 1);
    VectorXd rhs = VectorXd::Zero(k + 1);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j)
        B(i, j) = (errors[i].array() * errors[j].array()).sum();
      B(i, k) = B(k, i) = -1.0;
    }
    rhs(k) = -1.0;
    Eigen::FullPivLU<MatrixXd> lu(B);
    if (!lu.isInvertible()) return fock;
    VectorXd c = lu.solve(rhs);
    MatrixXd out = MatrixXd::Zero(fock.rows(), fock.cols());
    for (int i = 0; i < k; ++i) out += c(i) * focks[i];
    return out;
  }
};

// Core Roothaan loop in a basis where X^T S X = I.
RHFResult scf_loop(const MatrixXd& hcore, const MatrixXd& S, const MatrixXd& X,
                   const std::function<MatrixXd(const MatrixXd&)>& fock_of_density,
                   int n_electrons, double e_offset, const ScfOptions& opt) {
  require(n_electrons >= 0 && n_electrons % 2 == 0, ErrorKind::invalid_argument,
          "closed-shell SCF requires an even electron count");
  const int n_ao = static_cast<int>(hcore.rows());
  const int n_occ = n_electrons / 2;
  require(n_electrons <= 2 * static_cast<int>(X.cols()),
          ErrorKind::invalid_argument, "more electrons than spin orbitals");

  RHFResult res;
  res.n_occ = n_occ;

  // initial guess: core Hamiltonian in the orthonormalized basis
  MatrixXd f_ortho = X.transpose() * hcore * X;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(f_ortho);
  MatrixXd C = X * es.eigenvectors();
  MatrixXd D = 2.0 * C.leftCols(n_occ) * C.leftCols(n_occ).transpose();

  DiisState diis(opt.diis_depth);
  double e_prev = 0.0;

  for (int iter = 1; iter <= opt.max_iter; ++iter) {
    MatrixXd F = fock_of_density(D);
    const double e_elec = 0.5 * (D.array() * (hcore + F).array()).sum();
    const double e_total = e_elec + e_offset;

    MatrixXd err_ao = F * D * S - S * D * F;
    MatrixXd err = X.transpose() * err_ao * X;
    const double err_norm = err.cwiseAbs().maxCoeff();

    if (err_norm < opt.conv_tol && iter > 1) {
      res.converged = true;
      res.n_iterations = iter;
      res.e_total = e_total;
      res.mo_coeffs = C;
      res.density = D;
      Eigen::SelfAdjointEigenSolver<MatrixXd> esf(X.transpose() * F * X);
      res.orbital_energies = esf.eigenvalues();
      res.mo_coeffs = X * esf.eigenvectors();
      res.density = 2.0 * res.mo_coeffs.leftCols(n_occ) *
                    res.mo_coeffs.leftCols(n_occ).transpose();
      return res;
    }

    MatrixXd F_eff = diis.extrapolate(F, err);
    if (iter <= opt.level_shift_iters && opt.level_shift != 0.0) {
      // shift virtual space: F += lambda (S - S D S / 2)
      F_eff += opt.level_shift * (S - 0.5 * S * D * S);
    }

    Eigen::SelfAdjointEigenSolver<MatrixXd> esf(X.transpose() * F_eff * X);
    C = X * esf.eigenvectors();
    D = 2.0 * C.leftCols(n_occ) * C.leftCols(n_occ).transpose();
    res.orbital_energies = esf.eigenvalues();
    e_prev = e_total;
  }

  std::ostringstream msg;
  msg << "SCF not converged after " << opt.max_iter
      << " iterations, last energy " << e_prev;
  fail(ErrorKind::not_converged, msg.str());
}

}  // namespace

RHFResult run_rhf(const AOBundle& ao, int n_electrons, const ScfOptions& opt) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(ao.S);
  require(es.eigenvalues().minCoeff() > 1e-10, ErrorKind::invalid_argument,
          "singular overlap matrix");
  MatrixXd X = es.operatorInverseSqrt();

  auto fock = [&ao](const MatrixXd& D) {
    MatrixXd J, K;
    coulomb_exchange(ao.eri, D, J, K);
    return MatrixXd(ao.hcore + J - 0.5 * K);
  };
  return scf_loop(ao.hcore, ao.S, X, fock, n_electrons, ao.e_nuc, opt);
}

RHFResult run_rhf_orthonormal(const Eigen::MatrixXd& h, const PackedEri& eri,
                              int n_electrons, const ScfOptions& opt) {
  const int n = static_cast<int>(h.rows());
  MatrixXd S = MatrixXd::Identity(n, n);
  auto fock = [&](const MatrixXd& D) {
    MatrixXd J, K;
    coulomb_exchange(eri, D, J, K);
    return MatrixXd(h + J - 0.5 * K);
  };
  return scf_loop(h, S, S, fock, n_electrons, 0.0, opt);
}

}  // namespace sqdw
