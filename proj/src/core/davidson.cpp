#include "core/davidson.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "core/error.hpp"

namespace sqdw {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

DavidsonResult dense_lowest(const MatVec& apply, std::size_t dim) {
  MatrixXd a(dim, dim);
  std::vector<double> e(dim, 0.0), col(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    e[j] = 1.0;
    apply(e.data(), col.data());
    e[j] = 0.0;
    for (std::size_t i = 0; i < dim; ++i) a(i, j) = col[i];
  }
  a = 0.5 * (a + a.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(a);
  DavidsonResult res;
  res.e0 = es.eigenvalues()(0);
  res.v0.assign(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) res.v0[i] = es.eigenvectors()(i, 0);
  res.cycles = 0;
  return res;
}

// Orthonormalize v against the columns of basis (modified Gram-Schmidt, two
// passes); returns the remaining norm.
double orthonormalize(std::vector<VectorXd>& basis, VectorXd& v) {
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis) v -= b.dot(v) * b;
  const double norm = v.norm();
  if (norm > 1e-12) v /= norm;
  return norm;
}

}  // namespace

DavidsonResult davidson_lowest(const MatVec& apply,
                               const std::vector<double>& diagonal,
                               std::size_t dim, const DavidsonOptions& opt) {
  require(dim >= 1, ErrorKind::invalid_argument, "empty matrix");
  if (dim <= static_cast<std::size_t>(opt.dense_cutoff))
    return dense_lowest(apply, dim);

  // start at the smallest diagonal element
  std::size_t start = 0;
  for (std::size_t i = 1; i < dim; ++i)
    if (diagonal[i] < diagonal[start]) start = i;

  std::vector<VectorXd> basis, sigma;
  VectorXd v = VectorXd::Zero(dim);
  v(start) = 1.0;
  basis.push_back(v);

  VectorXd ritz = v;
  double theta = diagonal[start];
  double best_resid = 1e300;

  for (int cycle = 1; cycle <= opt.max_cycles; ++cycle) {
    while (sigma.size() < basis.size()) {
      VectorXd w(dim);
      apply(basis[sigma.size()].data(), w.data());
      sigma.push_back(std::move(w));
    }
    const int k = static_cast<int>(basis.size());
    MatrixXd h(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) h(i, j) = basis[i].dot(sigma[j]);
    h = 0.5 * (h + h.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(h);
    theta = es.eigenvalues()(0);
    const VectorXd y = es.eigenvectors().col(0);

    ritz = VectorXd::Zero(dim);
    VectorXd h_ritz = VectorXd::Zero(dim);
    for (int i = 0; i < k; ++i) {
      ritz += y(i) * basis[i];
      h_ritz += y(i) * sigma[i];
    }
    VectorXd resid = h_ritz - theta * ritz;
    const double rnorm = resid.norm();
    best_resid = std::min(best_resid, rnorm);

    if (rnorm < opt.tol) {
      DavidsonResult res;
      res.e0 = theta;
      res.v0.assign(ritz.data(), ritz.data() + dim);
      res.cycles = cycle;
      return res;
    }

    if (k >= opt.restart_dim) {
      basis.clear();
      sigma.clear();
      basis.push_back(ritz.normalized());
      continue;
    }

    // Jacobi preconditioner
    VectorXd t(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      double denom = theta - diagonal[i];
      if (std::abs(denom) < 1e-6) denom = (denom < 0 ? -1e-6 : 1e-6);
      t(i) = resid(i) / denom;
    }
    if (orthonormalize(basis, t) <= 1e-12) {
      // stagnated: deterministically bring in the next-lowest diagonal basis vector
      VectorXd probe = VectorXd::Zero(dim);
      std::size_t next = 0;
      double best = 1e300;
      for (std::size_t i = 0; i < dim; ++i) {
        if (std::abs(ritz(i)) > 1e-8) continue;
        if (diagonal[i] < best) {
          best = diagonal[i];
          next = i;
        }
      }
      probe(next) = 1.0;
      if (orthonormalize(basis, probe) <= 1e-12) continue;
      t = probe;
    }
    basis.push_back(t);
  }

  std::ostringstream msg;
  msg << "Davidson not converged after " << opt.max_cycles
      << " cycles; best estimate " << theta << " (residual " << best_resid
      << ")";
  fail(ErrorKind::not_converged, msg.str());
}

}  // namespace sqdw
