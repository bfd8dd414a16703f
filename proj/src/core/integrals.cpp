#include "core/integrals.hpp"

#include <cmath>

#include "core/boys.hpp"
#include "core/constants.hpp"
#include "core/error.hpp"

namespace sqdw {

namespace {

// Cartesian component powers per angular momentum (s, then p_x p_y p_z).
struct Component {
  int pow[3];
};
const Component kSComp[1] = {{{0, 0, 0}}};
const Component kPComp[3] = {{{1, 0, 0}}, {{0, 1, 0}}, {{0, 0, 1}}};

const Component* components(int l) { return l == 0 ? kSComp : kPComp; }
int n_components(int l) { return l == 0 ? 1 : 3; }

// Hermite expansion coefficients E[i][j][t] for one dimension, i <= imax,
// j <= jmax, t <= i + j (McMurchie-Davidson recurrence).
constexpr int kEMaxI = 2;
constexpr int kEMaxJ = 4;  // +2 beyond l for the kinetic-energy shift
constexpr int kEMaxT = kEMaxI + kEMaxJ + 1;

struct ETable {
  double e[kEMaxI + 1][kEMaxJ + 1][kEMaxT];

  void build(int imax, int jmax, double xpa, double xpb, double one_over_2p,
             double e000) {
    for (int i = 0; i <= imax; ++i)
      for (int j = 0; j <= jmax; ++j)
        for (int t = 0; t < kEMaxT; ++t) e[i][j][t] = 0.0;
    e[0][0][0] = e000;
    for (int i = 1; i <= imax; ++i)
      for (int t = 0; t <= i; ++t) {
        double v = xpa * e[i - 1][0][t];
        if (t > 0) v += one_over_2p * e[i - 1][0][t - 1];
        if (t + 1 <= i - 1) v += (t + 1) * e[i - 1][0][t + 1];
        e[i][0][t] = v;
      }
    for (int i = 0; i <= imax; ++i)
      for (int j = 1; j <= jmax; ++j)
        for (int t = 0; t <= i + j; ++t) {
          double v = xpb * e[i][j - 1][t];
          if (t > 0) v += one_over_2p * e[i][j - 1][t - 1];
          if (t + 1 <= i + j - 1) v += (t + 1) * e[i][j - 1][t + 1];
          e[i][j][t] = v;
        }
  }
};

// Hermite Coulomb integrals R^0_{tuv}(p, PC) up to total degree `order` <= 4.
constexpr int kRMax = 5;

struct RTable {
  double r[kRMax][kRMax][kRMax];
  double aux[kRMax + 1][kRMax][kRMax][kRMax];

  void build(int order, double p, const double pc[3]) {
    const double x = p * (pc[0] * pc[0] + pc[1] * pc[1] + pc[2] * pc[2]);
    double fm[kRMax + 1];
    boys_array(order, x, fm);

    double pow_m2p = 1.0;
    for (int n = 0; n <= order; ++n) {
      aux[n][0][0][0] = pow_m2p * fm[n];
      pow_m2p *= -2.0 * p;
    }
    for (int total = 1; total <= order; ++total)
      for (int t = 0; t <= total; ++t)
        for (int u = 0; u + t <= total; ++u) {
          const int v = total - t - u;
          for (int n = 0; n <= order - total; ++n) {
            double val;
            if (t > 0) {
              val = pc[0] * aux[n + 1][t - 1][u][v];
              if (t > 1) val += (t - 1) * aux[n + 1][t - 2][u][v];
            } else if (u > 0) {
              val = pc[1] * aux[n + 1][t][u - 1][v];
              if (u > 1) val += (u - 1) * aux[n + 1][t][u - 2][v];
            } else {
              val = pc[2] * aux[n + 1][t][u][v - 1];
              if (v > 1) val += (v - 1) * aux[n + 1][t][u][v - 2];
            }
            aux[n][t][u][v] = val;
          }
        }
    for (int t = 0; t <= order; ++t)
      for (int u = 0; u + t <= order; ++u)
        for (int v = 0; v + t + u <= order; ++v) r[t][u][v] = aux[0][t][u][v];
  }
};

struct PrimPair {
  double p;  // combined exponent
  double one_over_2p;
  double coef;  // product of contraction coefficients
  double beta;  // ket exponent (kinetic-energy shifts)
  double P[3];
  ETable e[3];  // Hermite coefficients up to l (not the kinetic +2)
};

struct ShellPairData {
  const BasisShell* a;
  const BasisShell* b;
  int ao_a, ao_b;  // first AO indices
  std::vector<PrimPair> prims;
};

ShellPairData make_shell_pair(const BasisShell& a, const BasisShell& b,
                              int ao_a, int ao_b, const Molecule& mol) {
  ShellPairData sp{&a, &b, ao_a, ao_b, {}};
  const auto& A = mol.atoms[a.atom].xyz;
  const auto& B = mol.atoms[b.atom].xyz;
  sp.prims.reserve(a.exponents.size() * b.exponents.size());
  for (std::size_t i = 0; i < a.exponents.size(); ++i)
    for (std::size_t j = 0; j < b.exponents.size(); ++j) {
      PrimPair pp;
      const double alpha = a.exponents[i], beta = b.exponents[j];
      pp.p = alpha + beta;
      pp.one_over_2p = 0.5 / pp.p;
      pp.coef = a.coefficients[i] * b.coefficients[j];
      pp.beta = beta;
      const double mu = alpha * beta / pp.p;
      for (int d = 0; d < 3; ++d) {
        const double ab = A[d] - B[d];
        pp.P[d] = (alpha * A[d] + beta * B[d]) / pp.p;
        const double e000 = std::exp(-mu * ab * ab);
        pp.e[d].build(a.l, b.l, pp.P[d] - A[d], pp.P[d] - B[d], pp.one_over_2p,
                      e000);
      }
      sp.prims.push_back(pp);
    }
  return sp;
}

// Overlap and kinetic blocks; builds its own extended E tables (j + 2).
void overlap_kinetic_block(const ShellPairData& sp, const Molecule& mol,
                           Eigen::MatrixXd& S, Eigen::MatrixXd& T) {
  const int la = sp.a->l, lb = sp.b->l;
  const int na = n_components(la), nb = n_components(lb);
  const Component* ca = components(la);
  const Component* cb = components(lb);
  const auto& A = mol.atoms[sp.a->atom].xyz;
  const auto& B = mol.atoms[sp.b->atom].xyz;

  for (const PrimPair& pp : sp.prims) {
    const double beta = pp.beta;
    const double alpha = pp.p - beta;
    const double root = std::sqrt(kPi / pp.p);
    const double mu = alpha * beta / pp.p;

    ETable ext[3];
    for (int d = 0; d < 3; ++d) {
      const double ab = A[d] - B[d];
      ext[d].build(la, lb + 2, pp.P[d] - A[d], pp.P[d] - B[d], pp.one_over_2p,
                   std::exp(-mu * ab * ab));
    }

    for (int ia = 0; ia < na; ++ia)
      for (int ib = 0; ib < nb; ++ib) {
        double s1[3], k1[3];
        for (int d = 0; d < 3; ++d) {
          const int i = ca[ia].pow[d], j = cb[ib].pow[d];
          s1[d] = ext[d].e[i][j][0] * root;
          double k = beta * (2 * j + 1) * ext[d].e[i][j][0] -
                     2.0 * beta * beta * ext[d].e[i][j + 2][0];
          if (j >= 2) k -= 0.5 * j * (j - 1) * ext[d].e[i][j - 2][0];
          k1[d] = k * root;
        }
        S(sp.ao_a + ia, sp.ao_b + ib) += pp.coef * s1[0] * s1[1] * s1[2];
        T(sp.ao_a + ia, sp.ao_b + ib) +=
            pp.coef * (k1[0] * s1[1] * s1[2] + s1[0] * k1[1] * s1[2] +
                       s1[0] * s1[1] * k1[2]);
      }
  }
}

void nuclear_block(const ShellPairData& sp, const Molecule& mol,
                   Eigen::MatrixXd& V) {
  const int la = sp.a->l, lb = sp.b->l;
  const int na = n_components(la), nb = n_components(lb);
  const Component* ca = components(la);
  const Component* cb = components(lb);
  const int order = la + lb;
  RTable rt;

  for (const PrimPair& pp : sp.prims) {
    const double pref = 2.0 * kPi / pp.p * pp.coef;
    for (const Atom& atom : mol.atoms) {
      double pc[3];
      for (int d = 0; d < 3; ++d) pc[d] = pp.P[d] - atom.xyz[d];
      rt.build(order, pp.p, pc);

      for (int ia = 0; ia < na; ++ia)
        for (int ib = 0; ib < nb; ++ib) {
          double sum = 0.0;
          const int px[3] = {ca[ia].pow[0], ca[ia].pow[1], ca[ia].pow[2]};
          const int qx[3] = {cb[ib].pow[0], cb[ib].pow[1], cb[ib].pow[2]};
          for (int t = 0; t <= px[0] + qx[0]; ++t)
            for (int u = 0; u <= px[1] + qx[1]; ++u)
              for (int v = 0; v <= px[2] + qx[2]; ++v)
                sum += pp.e[0].e[px[0]][qx[0]][t] * pp.e[1].e[px[1]][qx[1]][u] *
                       pp.e[2].e[px[2]][qx[2]][v] * rt.r[t][u][v];
          V(sp.ao_a + ia, sp.ao_b + ib) -= atom.z * pref * sum;
        }
    }
  }
}

// ERI block between two shell pairs, scattered into packed storage.
void eri_block(const ShellPairData& bra, const ShellPairData& ket,
               PackedEri& eri) {
  const int la = bra.a->l, lb = bra.b->l, lc = ket.a->l, ld = ket.b->l;
  const int na = n_components(la), nb = n_components(lb);
  const int nc = n_components(lc), nd = n_components(ld);
  const Component* ca = components(la);
  const Component* cb = components(lb);
  const Component* cc = components(lc);
  const Component* cd = components(ld);
  const int order = la + lb + lc + ld;

  double block[3][3][3][3] = {};
  RTable rt;

  for (const PrimPair& p1 : bra.prims) {
    for (const PrimPair& p2 : ket.prims) {
      const double alpha = p1.p * p2.p / (p1.p + p2.p);
      double pq[3];
      for (int d = 0; d < 3; ++d) pq[d] = p1.P[d] - p2.P[d];
      rt.build(order, alpha, pq);

      const double pref = 2.0 * std::pow(kPi, 2.5) /
                          (p1.p * p2.p * std::sqrt(p1.p + p2.p)) * p1.coef *
                          p2.coef;

      for (int ia = 0; ia < na; ++ia)
        for (int ib = 0; ib < nb; ++ib) {
          const int bx = ca[ia].pow[0], by = ca[ia].pow[1], bz = ca[ia].pow[2];
          const int jx = cb[ib].pow[0], jy = cb[ib].pow[1], jz = cb[ib].pow[2];
          for (int ic = 0; ic < nc; ++ic)
            for (int id = 0; id < nd; ++id) {
              const int kx = cc[ic].pow[0], ky = cc[ic].pow[1],
                        kz = cc[ic].pow[2];
              const int lx = cd[id].pow[0], ly = cd[id].pow[1],
                        lz = cd[id].pow[2];
              double sum = 0.0;
              for (int t = 0; t <= bx + jx; ++t)
                for (int u = 0; u <= by + jy; ++u)
                  for (int v = 0; v <= bz + jz; ++v) {
                    const double eb = p1.e[0].e[bx][jx][t] *
                                      p1.e[1].e[by][jy][u] *
                                      p1.e[2].e[bz][jz][v];
                    if (eb == 0.0) continue;
                    for (int tt = 0; tt <= kx + lx; ++tt)
                      for (int uu = 0; uu <= ky + ly; ++uu)
                        for (int vv = 0; vv <= kz + lz; ++vv) {
                          const double ek = p2.e[0].e[kx][lx][tt] *
                                            p2.e[1].e[ky][ly][uu] *
                                            p2.e[2].e[kz][lz][vv];
                          if (ek == 0.0) continue;
                          const double sign = ((tt + uu + vv) & 1) ? -1.0 : 1.0;
                          sum += eb * ek * sign * rt.r[t + tt][u + uu][v + vv];
                        }
                  }
              block[ia][ib][ic][id] += pref * sum;
            }
        }
    }
  }

  for (int ia = 0; ia < na; ++ia)
    for (int ib = 0; ib < nb; ++ib)
      for (int ic = 0; ic < nc; ++ic)
        for (int id = 0; id < nd; ++id)
          eri.at(bra.ao_a + ia, bra.ao_b + ib, ket.ao_a + ic, ket.ao_b + id) =
              block[ia][ib][ic][id];
}

}  // namespace

AOBundle compute_ao_integrals(const Molecule& mol, const std::string& basis_name) {
  return compute_ao_integrals(mol, build_basis(mol, basis_name));
}

AOBundle compute_ao_integrals(const Molecule& mol, const BasisSet& basis) {
  AOBundle ao;
  ao.n_ao = basis.n_ao;
  ao.basis_name = basis.name;
  ao.ao_atom_map = basis.ao_atom_map;
  ao.e_nuc = mol.nuclear_repulsion();
  ao.S = Eigen::MatrixXd::Zero(basis.n_ao, basis.n_ao);
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(basis.n_ao, basis.n_ao);
  Eigen::MatrixXd V = Eigen::MatrixXd::Zero(basis.n_ao, basis.n_ao);
  ao.eri = PackedEri(basis.n_ao);

  const int nsh = static_cast<int>(basis.shells.size());
  std::vector<ShellPairData> pairs;
  pairs.reserve(static_cast<std::size_t>(nsh) * (nsh + 1) / 2);
  for (int a = 0; a < nsh; ++a)
    for (int b = 0; b <= a; ++b)
      pairs.push_back(make_shell_pair(basis.shells[a], basis.shells[b],
                                      basis.shell_ao_offset[a],
                                      basis.shell_ao_offset[b], mol));

  for (const auto& sp : pairs) {
    overlap_kinetic_block(sp, mol, ao.S, T);
    nuclear_block(sp, mol, V);
  }
  // (a, b <= a) shell ordering fills row >= col; mirror the rest.
  auto mirror = [](Eigen::MatrixXd& m) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < i; ++j) {
        const double v = 0.5 * (m(i, j) + ((m(j, i) != 0.0) ? m(j, i) : m(i, j)));
        m(i, j) = m(j, i) = v;
      }
  };
  mirror(ao.S);
  mirror(T);
  mirror(V);
  ao.hcore = T + V;

  // Schwarz bounds for quartet screening
  std::vector<double> schwarz(pairs.size(), 0.0);
  {
    PackedEri probe(basis.n_ao);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      eri_block(pairs[p], pairs[p], probe);
      const int na = n_components(pairs[p].a->l);
      const int nb = n_components(pairs[p].b->l);
      double m = 0.0;
      for (int ia = 0; ia < na; ++ia)
        for (int ib = 0; ib < nb; ++ib) {
          const int mu = pairs[p].ao_a + ia, nu = pairs[p].ao_b + ib;
          m = std::max(m, std::abs(probe.get(mu, nu, mu, nu)));
        }
      schwarz[p] = std::sqrt(m);
    }
  }

  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t q = 0; q <= p; ++q) {
      if (schwarz[p] * schwarz[q] < 1e-16) continue;
      eri_block(pairs[p], pairs[q], ao.eri);
    }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ao.S);
  require(es.eigenvalues().minCoeff() > 1e-10, ErrorKind::invalid_argument,
          "overlap matrix is numerically singular");
  return ao;
}

void coulomb_exchange(const PackedEri& eri, const Eigen::MatrixXd& density,
                      Eigen::MatrixXd& coulomb, Eigen::MatrixXd& exchange) {
  const int n = eri.n();
  coulomb = Eigen::MatrixXd::Zero(n, n);
  exchange = Eigen::MatrixXd::Zero(n, n);

  // decode table: pair index -> (i, j) with i >= j
  std::vector<std::pair<int, int>> decode(PackedEri::pair_count(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) decode[PackedEri::pair_index(i, j)] = {i, j};

  auto add = [&](int a, int b, int c, int d, double v) {
    coulomb(a, b) += v * density(c, d);
    exchange(a, c) += v * density(b, d);
  };

  std::size_t idx = 0;
  const std::size_t npair = PackedEri::pair_count(n);
  for (std::size_t pij = 0; pij < npair; ++pij) {
    const auto [i, j] = decode[pij];
    for (std::size_t q = 0; q <= pij; ++q, ++idx) {
      const double v = eri.raw()[idx];
      if (v == 0.0) continue;
      const auto [k, l] = decode[q];
      const bool ij_same = (i == j), kl_same = (k == l);
      const bool pair_same = (pij == q);
      add(i, j, k, l, v);
      if (!ij_same) add(j, i, k, l, v);
      if (!kl_same) add(i, j, l, k, v);
      if (!ij_same && !kl_same) add(j, i, l, k, v);
      if (!pair_same) {
        add(k, l, i, j, v);
        if (!kl_same) add(l, k, i, j, v);
        if (!ij_same) add(k, l, j, i, v);
        if (!kl_same && !ij_same) add(l, k, j, i, v);
      }
    }
  }
}

}  // namespace sqdw
