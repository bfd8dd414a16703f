#include "support/oracles.hpp"

#include <bit>
#include <cmath>

#include "core/ops.hpp"

namespace sqdw::testing {

namespace {

// Apply a^+_m (create) or a_m to an occupation mask with JW parity; the sign
// bookkeeping here is written from scratch on purpose.
bool mode_op(std::uint64_t& mask, int m, bool create, int& sign) {
  const std::uint64_t bit = 1ull << m;
  const bool occupied = mask & bit;
  if (create == occupied) return false;
  const std::uint64_t below = mask & (bit - 1);
  if (std::popcount(below) & 1) sign = -sign;
  mask ^= bit;
  return true;
}

}  // namespace

Eigen::MatrixXd jw_sector_hamiltonian(const DetSpace& space,
                                      const MOIntegrals& mo) {
  const int n = space.n_orb;
  const std::size_t dim = space.size();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

  for (std::size_t col = 0; col < dim; ++col) {
    const std::uint64_t ket = occ_mask(space[col], n);

    // one-body: sum_pq h_pq sum_sigma a^+_p a_q
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const double hpq = mo.h(p, q);
        if (hpq == 0.0) continue;
        for (int spin = 0; spin < 2; ++spin) {
          std::uint64_t m = ket;
          int sign = 1;
          if (!mode_op(m, q + spin * n, false, sign)) continue;
          if (!mode_op(m, p + spin * n, true, sign)) continue;
          const long row = space.index_of(from_occ_mask(m, n));
          if (row >= 0) h(row, col) += sign * hpq;
        }
      }

    // two-body: 1/2 sum_pqrs (pq|rs) sum_{sigma tau} a^+_p a^+_r a_s a_q
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s) {
            const double g = mo.g(p, q, r, s);
            if (g == 0.0) continue;
            for (int sp = 0; sp < 2; ++sp)
              for (int tp = 0; tp < 2; ++tp) {
                std::uint64_t m = ket;
                int sign = 1;
                if (!mode_op(m, q + sp * n, false, sign)) continue;
                if (!mode_op(m, s + tp * n, false, sign)) continue;
                if (!mode_op(m, r + tp * n, true, sign)) continue;
                if (!mode_op(m, p + sp * n, true, sign)) continue;
                const long row = space.index_of(from_occ_mask(m, n));
                if (row >= 0) h(row, col) += 0.5 * sign * g;
              }
          }
  }
  return h;
}

Eigen::MatrixXcd pauli_full_hamiltonian(const MOIntegrals& mo) {
  using cxd = std::complex<double>;
  const int n_modes = 2 * mo.n_orb;
  const std::size_t dim = 1ull << n_modes;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);

  const cxd I(0.0, 1.0);

  // Pauli action on a basis state: returns (new_index, phase).
  // X flips; Y flips with phase; Z leaves with phase.
  struct PauliString {
    std::vector<char> ops;  // 'I','X','Y','Z' per qubit
    cxd coef;
  };

  // JW: a_m = 1/2 (X + iY)_m prod_{k<m} Z_k ; a^+_m = 1/2 (X - iY)_m Z...
  // Build each Hamiltonian term as a product of one-mode operator expansions.
  struct OpTerm {
    int mode;
    bool create;
  };
  auto add_product = [&](const std::vector<OpTerm>& ops, double coef) {
    // expand the product of (X -+ iY)/2 factors with Z strings into Pauli
    // strings, then add the matrix of each string
    std::vector<PauliString> terms{{std::vector<char>(n_modes, 'I'), cxd(coef)}};
    for (const OpTerm& op : ops) {
      std::vector<PauliString> next;
      for (const PauliString& t : terms)
        for (int choice = 0; choice < 2; ++choice) {
          PauliString s = t;
          // multiply on the RIGHT by: 1/2 (X or ∓iY) at op.mode with Z chain
          // below; composing single-qubit Paulis left*right.
          cxd factor = 0.5;
          char newp = choice == 0 ? 'X' : 'Y';
          if (choice == 1) factor *= op.create ? -I : I;
          auto mul = [&](char a, char b, cxd& phase) -> char {
            if (a == 'I') return b;
            if (b == 'I') return a;
            if (a == b) return 'I';
            // XY=iZ YX=-iZ YZ=iX ZY=-iX ZX=iY XZ=-iY
            if (a == 'X' && b == 'Y') { phase *= I;  return 'Z'; }
            if (a == 'Y' && b == 'X') { phase *= -I; return 'Z'; }
            if (a == 'Y' && b == 'Z') { phase *= I;  return 'X'; }
            if (a == 'Z' && b == 'Y') { phase *= -I; return 'X'; }
            if (a == 'Z' && b == 'X') { phase *= I;  return 'Y'; }
            /* a=='X' && b=='Z' */      phase *= -I; return 'Y';
          };
          cxd phase = 1.0;
          for (int k = 0; k < op.mode; ++k) s.ops[k] = mul(s.ops[k], 'Z', phase);
          s.ops[op.mode] = mul(s.ops[op.mode], newp, phase);
          s.coef *= factor * phase;
          next.push_back(std::move(s));
        }
      terms = std::move(next);
    }
    // add matrices
    for (const PauliString& t : terms) {
      for (std::size_t basis = 0; basis < dim; ++basis) {
        std::size_t out = basis;
        cxd amp = t.coef;
        for (int qb = 0; qb < n_modes; ++qb) {
          const bool bit = (basis >> qb) & 1;
          switch (t.ops[qb]) {
            case 'I': break;
            case 'X': out ^= (1ull << qb); break;
            case 'Y':
              out ^= (1ull << qb);
              amp *= bit ? -I : I;
              break;
            case 'Z':
              if (bit) amp = -amp;
              break;
          }
        }
        h(out, basis) += amp;
      }
    }
  };

  for (int p = 0; p < mo.n_orb; ++p)
    for (int q = 0; q < mo.n_orb; ++q) {
      const double hpq = mo.h(p, q);
      if (hpq == 0.0) continue;
      for (int spin = 0; spin < 2; ++spin)
        add_product({{p + spin * mo.n_orb, true}, {q + spin * mo.n_orb, false}},
                    hpq);
    }
  for (int p = 0; p < mo.n_orb; ++p)
    for (int q = 0; q < mo.n_orb; ++q)
      for (int r = 0; r < mo.n_orb; ++r)
        for (int s = 0; s < mo.n_orb; ++s) {
          const double g = mo.g(p, q, r, s);
          if (g == 0.0) continue;
          for (int sp = 0; sp < 2; ++sp)
            for (int tp = 0; tp < 2; ++tp)
              add_product({{p + sp * mo.n_orb, true},
                           {r + tp * mo.n_orb, true},
                           {s + tp * mo.n_orb, false},
                           {q + sp * mo.n_orb, false}},
                          0.5 * g);
        }
  return h;
}

double contracted_s_overlap(const std::vector<double>& ea,
                            const std::vector<double>& ca,
                            const std::vector<double>& eb,
                            const std::vector<double>& cb, double r) {
  double s = 0.0;
  for (std::size_t i = 0; i < ea.size(); ++i)
    for (std::size_t j = 0; j < eb.size(); ++j) {
      const double p = ea[i] + eb[j];
      const double mu = ea[i] * eb[j] / p;
      s += ca[i] * cb[j] * std::pow(M_PI / p, 1.5) * std::exp(-mu * r * r);
    }
  return s;
}

std::complex<double> rotation_amplitude_minor(const Eigen::MatrixXcd& u,
                                              std::uint32_t occ_bra,
                                              std::uint32_t occ_ket) {
  std::vector<int> rows, cols;
  for (int p = 0; p < u.rows(); ++p)
    if (occ_bra >> p & 1u) rows.push_back(p);
  for (int p = 0; p < u.cols(); ++p)
    if (occ_ket >> p & 1u) cols.push_back(p);
  if (rows.size() != cols.size()) return 0.0;
  const int k = static_cast<int>(rows.size());
  if (k == 0) return 1.0;
  Eigen::MatrixXcd sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub(i, j) = u(rows[i], cols[j]);
  return sub.determinant();
}

}  // namespace sqdw::testing
