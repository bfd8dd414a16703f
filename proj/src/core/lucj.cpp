#include "core/lucj.hpp"

#include <algorithm>
#include <cmath>

#include "core/constants.hpp"
#include "core/detspace.hpp"
#include "core/error.hpp"

namespace sqdw {

LucjParams lucj_params_from_t2(const Amplitudes& amps, int n_orb, int n_reps) {
  const int no = amps.n_occ, nv = amps.n_virt;
  require(no + nv == n_orb, ErrorKind::invalid_argument,
          "amplitude dimensions do not match n_orb");
  LucjParams params;
  params.n_orb = n_orb;
  if (nv == 0 || n_reps <= 0) return params;

  // t2 reshaped over compound (i, a) pairs; symmetric by the t2(ijab) =
  // t2(jiba) permutation symmetry
  const int m = no * nv;
  Eigen::MatrixXd t2_mat(m, m);
  for (int i = 0; i < no; ++i)
    for (int a = 0; a < nv; ++a)
      for (int j = 0; j < no; ++j)
        for (int b = 0; b < nv; ++b)
          t2_mat(i * nv + a, j * nv + b) = amps.t2_os(i, j, a, b);
  t2_mat = 0.5 * (t2_mat + t2_mat.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t2_mat);
  std::vector<int> order(m);
  for (int k = 0; k < m; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::abs(es.eigenvalues()(x)) > std::abs(es.eigenvalues()(y));
  });

  // One repetition applies the complete factorized product, one layer per
  // retained eigenpair; n_reps repeats the block with 1/n_reps-scaled
  // couplings. Eigenvalues below the relative floor contribute nothing.
  const double floor = 1e-12 * std::max(1.0, std::abs(es.eigenvalues()(order[0])));
  const cxd phase(std::cos(kPi / 4.0), std::sin(kPi / 4.0));
  std::vector<LucjLayer> block;
  for (int k = 0; k < m; ++k) {
    const double lambda = es.eigenvalues()(order[k]) / n_reps;
    if (std::abs(es.eigenvalues()(order[k])) < floor) break;
    const Eigen::VectorXd u = es.eigenvectors().col(order[k]);

    // Hermitian one-body matrix with the occ-virt block phased by exp(i pi/4);
    // diagonalizing it gives the layer rotation and the J couplings.
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(n_orb, n_orb);
    for (int i = 0; i < no; ++i)
      for (int a = 0; a < nv; ++a) {
        mat(i, no + a) = phase * u(i * nv + a);
        mat(no + a, i) = std::conj(phase) * u(i * nv + a);
      }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> inner(mat);
    const Eigen::VectorXd d = inner.eigenvalues();
    const Eigen::MatrixXcd v = inner.eigenvectors();

    LucjLayer layer;
    layer.j_aa = 0.5 * lambda * d * d.transpose();
    layer.j_bb = layer.j_aa;
    layer.j_ab = layer.j_aa;

    // T = log(V): V is unitary, so log through its spectral decomposition
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ve(v);
    Eigen::MatrixXcd w = ve.eigenvectors();
    Eigen::VectorXcd logd(n_orb);
    for (int p = 0; p < n_orb; ++p) {
      const cxd ev = ve.eigenvalues()(p);
      logd(p) = cxd(0.0, std::atan2(ev.imag(), ev.real()));
    }
    layer.t_generator = w * logd.asDiagonal() * w.inverse();
    // enforce exact anti-Hermiticity against roundoff
    layer.t_generator =
        0.5 * (layer.t_generator - layer.t_generator.adjoint().eval());
    block.push_back(std::move(layer));
  }
  for (int rep = 0; rep < n_reps; ++rep)
    for (const LucjLayer& layer : block) params.layers.push_back(layer);
  return params;
}

std::vector<double> jastrow_phase_table(int n_orb, const LucjLayer& layer) {
  const int n = n_orb;
  const std::size_t half = 1ull << n;

  // per-half-mask quadratic forms
  std::vector<double> f_aa(half, 0.0), f_bb(half, 0.0);
  for (std::size_t mask = 0; mask < half; ++mask) {
    double aa = 0.0, bb = 0.0;
    for (int p = 0; p < n; ++p) {
      if (!(mask >> p & 1u)) continue;
      for (int q = 0; q < n; ++q) {
        if (!(mask >> q & 1u)) continue;
        aa += layer.j_aa(p, q);
        bb += layer.j_bb(p, q);
      }
    }
    f_aa[mask] = aa;
    f_bb[mask] = bb;
  }
  // cross term: row sums of J_ab against an alpha mask
  std::vector<std::vector<double>> row(half, std::vector<double>(n, 0.0));
  for (std::size_t mask = 0; mask < half; ++mask)
    for (int q = 0; q < n; ++q) {
      double acc = 0.0;
      for (int p = 0; p < n; ++p)
        if (mask >> p & 1u) acc += layer.j_ab(p, q);
      row[mask][q] = acc;
    }

  std::vector<double> table(half * half);
  for (std::size_t b = 0; b < half; ++b)
    for (std::size_t a = 0; a < half; ++a) {
      double cross = 0.0;
      for (int q = 0; q < n; ++q)
        if (b >> q & 1u) cross += row[a][q];
      table[(b << n) | a] = f_aa[a] + f_bb[b] + 2.0 * cross;
    }
  return table;
}

// exp(T) for anti-Hermitian T through the spectral decomposition of -iT
static Eigen::MatrixXcd expm_antihermitian(const Eigen::MatrixXcd& t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      (cxd(0.0, -1.0) * t).eval());
  Eigen::VectorXcd ph(t.rows());
  for (int p = 0; p < t.rows(); ++p) {
    const double th = es.eigenvalues()(p);
    ph(p) = cxd(std::cos(th), std::sin(th));
  }
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

Statevector prepare_lucj_state(int n_orb, int n_alpha, int n_beta,
                               const LucjParams& params) {
  require(2 * n_orb <= 20, ErrorKind::invalid_argument,
          "statevector limited to 20 qubits");
  require(params.n_orb == n_orb || params.layers.empty(),
          ErrorKind::invalid_argument, "parameter dimension mismatch");

  Statevector sv(2 * n_orb);
  const std::uint32_t amask = (1u << n_alpha) - 1u;
  const std::uint32_t bmask = (1u << n_beta) - 1u;
  sv.set_basis_state(determinant_to_basis_index({amask, bmask}, n_orb));

  for (const LucjLayer& layer : params.layers) {
    require(
        (layer.t_generator + layer.t_generator.adjoint()).cwiseAbs().maxCoeff() <
            1e-12,
        ErrorKind::invalid_argument, "T generator is not anti-Hermitian");
    const Eigen::MatrixXcd v = expm_antihermitian(layer.t_generator);
    // exp(-T), diagonal Jastrow, exp(T); spin-shared rotation
    apply_orbital_rotation(sv, v.adjoint(), 0);
    apply_orbital_rotation(sv, v.adjoint(), n_orb);
    sv.apply_diagonal_phases(jastrow_phase_table(n_orb, layer));
    apply_orbital_rotation(sv, v, 0);
    apply_orbital_rotation(sv, v, n_orb);
  }
  return sv;
}

CircuitDesc lucj_circuit(int n_orb, int n_alpha, int n_beta,
                         const LucjParams& params) {
  CircuitDesc c;
  c.n_qubits = 2 * n_orb;
  for (int p = 0; p < n_alpha; ++p)
    c.gates.push_back({.kind = Gate::Kind::x, .q0 = p});
  for (int p = 0; p < n_beta; ++p)
    c.gates.push_back({.kind = Gate::Kind::x, .q0 = n_orb + p});

  auto emit_rotation = [&c](const Eigen::MatrixXcd& u, int offset) {
    GivensDecomposition dec = givens_decompose(u);
    for (int p = 0; p < u.rows(); ++p)
      if (std::abs(dec.mode_phases[p] - cxd(1.0, 0.0)) > 1e-15) {
        Gate g{.kind = Gate::Kind::phase1q, .q0 = offset + p};
        g.phase = dec.mode_phases[p];
        c.gates.push_back(g);
      }
    for (const auto& blk : dec.blocks) {
      Gate g{.kind = Gate::Kind::givens, .q0 = offset + blk.mode};
      g.block = blk.g;
      c.gates.push_back(g);
    }
  };

  for (const LucjLayer& layer : params.layers) {
    const Eigen::MatrixXcd v = expm_antihermitian(layer.t_generator);
    emit_rotation(v.adjoint(), 0);
    emit_rotation(v.adjoint(), n_orb);
    // Jastrow phases: same-spin pairs, same-spin diagonals, cross-spin pairs
    for (int spin = 0; spin < 2; ++spin) {
      const Eigen::MatrixXd& j = spin ? layer.j_bb : layer.j_aa;
      const int off = spin * n_orb;
      for (int p = 0; p < n_orb; ++p) {
        if (j(p, p) != 0.0) {
          Gate g{.kind = Gate::Kind::phase1q, .q0 = off + p};
          g.phase = cxd(std::cos(j(p, p)), std::sin(j(p, p)));
          c.gates.push_back(g);
        }
        for (int q = p + 1; q < n_orb; ++q)
          if (j(p, q) != 0.0)
            c.gates.push_back({.kind = Gate::Kind::cp,
                               .q0 = off + p,
                               .q1 = off + q,
                               .angle = 2.0 * j(p, q)});
      }
    }
    for (int p = 0; p < n_orb; ++p)
      for (int q = 0; q < n_orb; ++q)
        if (layer.j_ab(p, q) != 0.0)
          c.gates.push_back({.kind = Gate::Kind::cp,
                             .q0 = p,
                             .q1 = n_orb + q,
                             .angle = 2.0 * layer.j_ab(p, q)});
    emit_rotation(v, 0);
    emit_rotation(v, n_orb);
  }
  return c;
}

int lucj_parameter_count(const LucjParams& params) {
  int n = 0;
  for (const auto& layer : params.layers) {
    const int m = static_cast<int>(layer.j_aa.rows());
    n += m * m;               // anti-Hermitian generator
    n += 3 * m * (m + 1) / 2; // J_aa, J_bb, J_ab symmetric
  }
  return n;
}

}  // namespace sqdw
