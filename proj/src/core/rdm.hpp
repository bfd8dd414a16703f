#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/detspace.hpp"
#include "core/mo.hpp"

namespace sqdw {

// Spin-summed reduced density matrices in the conventions
//   rdm1(p, q)      = sum_sigma <a^+_{p sigma} a_{q sigma}>
//   rdm2[p,q,r,s]   = sum_{sigma tau} <a^+_{p sigma} a^+_{r tau} a_{s tau} a_{q sigma}>
// so that E = sum h.rdm1 + 1/2 sum (pq|rs) rdm2[pqrs].
struct RdmSet {
  Eigen::MatrixXd rdm1;
  std::vector<double> rdm2;  // [p][q][r][s] row-major, n_orb^4
  Eigen::VectorXd occupancies;  // 2 n_orb, [alpha 0..n-1, beta 0..n-1]
  double s2 = 0.0;

  double g2(int p, int q, int r, int s, int n) const {
    return rdm2[((static_cast<std::size_t>(p) * n + q) * n + r) * n + s];
  }
};

// Transition RDMs <bra| ... |ket>; pass the same vector twice for a state.
RdmSet compute_rdms(const DetSpace& space, const std::vector<double>& bra,
                    const std::vector<double>& ket, bool with_rdm2 = true);

inline RdmSet compute_rdms(const DetSpace& space, const std::vector<double>& v,
                           bool with_rdm2 = true) {
  return compute_rdms(space, v, v, with_rdm2);
}

// E_elec = sum h rdm1 + 1/2 sum g rdm2 (no e_core).
double energy_from_rdms(const MOIntegrals& mo, const RdmSet& rdms);

}  // namespace sqdw
