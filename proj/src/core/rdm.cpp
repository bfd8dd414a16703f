#include "core/rdm.hpp"

#include <bit>

#include "core/error.hpp"
#include "core/ops.hpp"

namespace sqdw {

RdmSet compute_rdms(const DetSpace& space, const std::vector<double>& bra,
                    const std::vector<double>& ket, bool with_rdm2) {
  const int n = space.n_orb;
  const std::size_t dim = space.size();
  require(bra.size() == dim && ket.size() == dim, ErrorKind::invalid_argument,
          "vector length does not match space");

  RdmSet out;
  out.rdm1 = Eigen::MatrixXd::Zero(n, n);
  out.occupancies = Eigen::VectorXd::Zero(2 * n);

  // E_rs |ket> for every orbital pair
  std::vector<std::vector<double>> ket_e(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) ket_e[r * n + s] = apply_e_pq(space, r, s, ket);

  const bool same_state = (&bra == &ket) || bra == ket;
  std::vector<std::vector<double>> bra_e;
  if (!same_state) {
    bra_e.resize(static_cast<std::size_t>(n) * n);
    for (int q = 0; q < n; ++q)
      for (int p = 0; p < n; ++p)
        bra_e[p * n + q] = apply_e_pq(space, q, p, bra);
  }
  auto bra_vec = [&](int p, int q) -> const std::vector<double>& {
    // <bra| E_pq as a ket: E_qp |bra>
    return same_state ? ket_e[q * n + p] : bra_e[p * n + q];
  };

  auto dot = [dim](const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) acc += a[i] * b[i];
    return acc;
  };

  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      double acc = 0.0;
      const std::vector<double>& w = ket_e[p * n + q];
      for (std::size_t i = 0; i < dim; ++i) acc += bra[i] * w[i];
      out.rdm1(p, q) = acc;
    }

  // spin-resolved diagonal occupations
  for (std::size_t i = 0; i < dim; ++i) {
    const double w = bra[i] * ket[i];
    if (w == 0.0) continue;
    const Determinant& d = space[i];
    for (int p = 0; p < n; ++p) {
      if (d.alpha >> p & 1u) out.occupancies(p) += w;
      if (d.beta >> p & 1u) out.occupancies(n + p) += w;
    }
  }

  if (with_rdm2) {
    out.rdm2.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const std::vector<double>& b = bra_vec(p, q);
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s) {
            double v = dot(b, ket_e[r * n + s]);
            if (q == r) v -= out.rdm1(p, s);
            out.rdm2[((static_cast<std::size_t>(p) * n + q) * n + r) * n + s] = v;
          }
      }
  }

  // <S^2> = ||S+ ket||-type expectation; for transition sets this is the
  // ket-state value, which is what diagnostics report.
  {
    auto splus = apply_s_plus(space, ket);
    double ss = 0.0;
    for (const auto& [k, amp] : splus) ss += amp * amp;
    const double sz = 0.5 * (space.n_alpha - space.n_beta);
    double norm2 = 0.0;
    for (double c : ket) norm2 += c * c;
    if (norm2 > 0) out.s2 = ss / norm2 + sz * (sz + 1.0);
  }
  return out;
}

double energy_from_rdms(const MOIntegrals& mo, const RdmSet& rdms) {
  const int n = mo.n_orb;
  double e = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) e += mo.h(p, q) * rdms.rdm1(p, q);
  double e2 = 0.0;
  const double* g = mo.eri.data();
  const double* d = rdms.rdm2.data();
  const std::size_t total = static_cast<std::size_t>(n) * n * n * n;
  for (std::size_t i = 0; i < total; ++i) e2 += g[i] * d[i];
  return e + 0.5 * e2;
}

}  // namespace sqdw
