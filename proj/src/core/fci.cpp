#include "core/fci.hpp"

#include "core/error.hpp"
#include "core/slater_condon.hpp"

namespace sqdw {

SpectralResult solve_subspace(const DetSpace& space, const MOIntegrals& mo,
                              const DavidsonOptions& opt, bool with_rdm2) {
  const SparseSym h = build_subspace_hamiltonian(space, mo);
  auto apply = [&h](const double* x, double* y) { h.matvec(x, y); };
  DavidsonResult dav = davidson_lowest(apply, h.diagonal, h.dim, opt);

  SpectralResult res;
  res.e0 = dav.e0;
  res.ground_vector = std::move(dav.v0);
  res.davidson_cycles = dav.cycles;

  RdmSet rdms = compute_rdms(space, res.ground_vector, with_rdm2);
  res.rdm1 = std::move(rdms.rdm1);
  res.rdm2 = std::move(rdms.rdm2);
  res.avg_occupancy = std::move(rdms.occupancies);
  res.s2 = rdms.s2;
  return res;
}

SpectralResult fci_ground_state(const MOIntegrals& mo, int n_alpha, int n_beta,
                                const DavidsonOptions& opt, bool with_rdm2) {
  const double dim = static_cast<double>(binomial(mo.n_orb, n_alpha)) *
                     static_cast<double>(binomial(mo.n_orb, n_beta));
  require(dim <= 1e7, ErrorKind::invalid_argument,
          "FCI space too large (> 1e7 determinants)");
  DetSpace space = enumerate_symmetry_space(mo.n_orb, n_alpha, n_beta);
  return solve_subspace(space, mo, opt, with_rdm2);
}

}  // namespace sqdw
