#include "core/mo.hpp"

#include <cmath>

#include "core/error.hpp"

namespace sqdw {

std::vector<double> transform_eri(const PackedEri& ao_eri,
                                  const Eigen::MatrixXd& coeffs) {
  const int n = ao_eri.n();
  const int m = static_cast<int>(coeffs.cols());
  require(coeffs.rows() == n, ErrorKind::invalid_argument,
          "coefficient rows do not match AO dimension");

  const std::size_t n_pair_ao = PackedEri::pair_count(n);
  const std::size_t n_pair_mo = PackedEri::pair_count(m);

  std::vector<std::pair<int, int>> decode(n_pair_ao);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) decode[PackedEri::pair_index(i, j)] = {i, j};

  // half transform: (pq | lambda sigma) packed over both pair indices
  std::vector<double> half(n_pair_mo * n_pair_ao);
  Eigen::MatrixXd slice(n, n), hm;
  for (std::size_t q = 0; q < n_pair_ao; ++q) {
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu <= mu; ++nu) {
        const double v =
            ao_eri.raw()[q <= PackedEri::pair_index(mu, nu)
                             ? PackedEri::tri(PackedEri::pair_index(mu, nu)) + q
                             : PackedEri::tri(q) + PackedEri::pair_index(mu, nu)];
        slice(mu, nu) = v;
        slice(nu, mu) = v;
      }
    hm = coeffs.transpose() * slice * coeffs;
    for (int p = 0; p < m; ++p)
      for (int r = 0; r <= p; ++r)
        half[PackedEri::pair_index(p, r) * n_pair_ao + q] = hm(p, r);
  }

  // second half: unpack (lambda sigma) slice and transform again
  std::vector<double> out(static_cast<std::size_t>(m) * m * m * m);
  auto set = [&](int p, int q2, int r, int s, double v) {
    out[((static_cast<std::size_t>(p) * m + q2) * m + r) * m + s] = v;
  };
  for (int p = 0; p < m; ++p)
    for (int r = 0; r <= p; ++r) {
      const double* row = &half[PackedEri::pair_index(p, r) * n_pair_ao];
      for (std::size_t q = 0; q < n_pair_ao; ++q) {
        const auto [mu, nu] = decode[q];
        slice(mu, nu) = row[q];
        slice(nu, mu) = row[q];
      }
      hm = coeffs.transpose() * slice * coeffs;
      for (int t = 0; t < m; ++t)
        for (int u = 0; u <= t; ++u) {
          if (PackedEri::pair_index(t, u) > PackedEri::pair_index(p, r)) continue;
          const double v = hm(t, u);
          // scatter the 8 equivalent chemist-notation slots
          set(p, r, t, u, v);
          set(r, p, t, u, v);
          set(p, r, u, t, v);
          set(r, p, u, t, v);
          set(t, u, p, r, v);
          set(u, t, p, r, v);
          set(t, u, r, p, v);
          set(u, t, r, p, v);
        }
    }
  return out;
}

MOIntegrals ao_to_mo(const AOBundle& ao, const Eigen::MatrixXd& coeffs) {
  MOIntegrals mo;
  mo.n_orb = static_cast<int>(coeffs.cols());
  mo.h = coeffs.transpose() * ao.hcore * coeffs;
  mo.eri = transform_eri(ao.eri, coeffs);
  mo.e_core = ao.e_nuc;
  return mo;
}

double eri_symmetry_violation(const MOIntegrals& mo) {
  const int n = mo.n_orb;
  double worst = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const double v = mo.g(p, q, r, s);
          worst = std::max(worst, std::abs(v - mo.g(q, p, r, s)));
          worst = std::max(worst, std::abs(v - mo.g(p, q, s, r)));
          worst = std::max(worst, std::abs(v - mo.g(r, s, p, q)));
        }
  return worst;
}

}  // namespace sqdw
