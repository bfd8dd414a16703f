#include "core/mp2.hpp"

#include <cmath>
#include <sstream>

#include "core/error.hpp"

namespace sqdw {

Mp2Result mp2_amplitudes(const MOIntegrals& mo,
                         const Eigen::VectorXd& eps, int n_occ) {
  const int n = mo.n_orb;
  const int n_virt = n - n_occ;
  require(n_occ > 0 && n_virt >= 0, ErrorKind::invalid_argument,
          "bad occupied count for MP2");

  Mp2Result res;
  res.amplitudes.n_occ = n_occ;
  res.amplitudes.n_virt = n_virt;
  res.amplitudes.t1 = Eigen::MatrixXd::Zero(n_occ, n_virt);
  res.amplitudes.t2.assign(
      static_cast<std::size_t>(n_occ) * n_occ * n_virt * n_virt, 0.0);
  res.amplitudes.source = Amplitudes::Source::mp2;
  if (n_virt == 0) return res;

  double gap = eps(n_occ) - eps(n_occ - 1);
  require(gap > 1e-8, ErrorKind::invalid_argument,
          "degenerate occupied/virtual gap, MP2 undefined");

  double e2 = 0.0;
  for (int i = 0; i < n_occ; ++i)
    for (int j = 0; j < n_occ; ++j)
      for (int a = 0; a < n_virt; ++a)
        for (int b = 0; b < n_virt; ++b) {
          const double denom =
              eps(i) + eps(j) - eps(n_occ + a) - eps(n_occ + b);
          if (std::abs(denom) < 1e-10) {
            std::ostringstream msg;
            msg << "vanishing MP2 denominator for (i,j,a,b)=(" << i << "," << j
                << "," << a << "," << b << ")";
            fail(ErrorKind::invalid_argument, msg.str());
          }
          const double iajb = mo.g(i, n_occ + a, j, n_occ + b);
          const double ibja = mo.g(i, n_occ + b, j, n_occ + a);
          const double t = iajb / denom;
          res.amplitudes.t2_ref(i, j, a, b) = t;
          e2 += t * (2.0 * iajb - ibja);
        }
  res.e_mp2 = e2;
  return res;
}

}  // namespace sqdw
