#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "core/amplitudes_io.hpp"
#include "core/ccsd.hpp"
#include "core/fci.hpp"
#include "core/rdm.hpp"
#include "support/reference_systems.hpp"

using namespace sqdw;

TEST_CASE("two-electron systems: CCSD equals FCI") {
  for (const char* name : {"h2", "lih"}) {
    if (std::string(name) == "lih") continue;  // 4 electrons, handled below
    const auto& sys = testing::prepared(name);
    CcsdResult cc = ccsd_solve(sys.mo, sys.rhf.orbital_energies, sys.rhf.n_occ);
    const double fci = fci_total_energy(sys.mo, sys.n_alpha, sys.n_beta);
    CHECK(std::abs(cc.e_total - fci) < 1e-7);
    CHECK(cc.max_residual < 1e-8);
  }
  // HeH+ is the second two-electron case
  Molecule m = parse_geometry("He 0 0 0\nH 0 0 0.9344", LengthUnit::angstrom, 1);
  AOBundle ao = compute_ao_integrals(m, "sto-3g");
  RHFResult rhf = run_rhf(ao, 2);
  MOIntegrals mo = ao_to_mo(ao, rhf.mo_coeffs);
  CcsdResult cc = ccsd_solve(mo, rhf.orbital_energies, 1);
  CHECK(std::abs(cc.e_total - fci_total_energy(mo, 1, 1)) < 1e-7);
}

TEST_CASE("CCSD reproduces the benchmark energies (H2, LiH, H2O)") {
  struct Row { const char* name; double ref; };
  for (auto [name, ref] : {Row{"h2", -1.12784260513579},
                           Row{"lih", -7.88116714390917},
                           Row{"h2o", -75.01541232667518}}) {
    const auto& sys = testing::prepared(name);
    CcsdResult cc = ccsd_solve(sys.mo, sys.rhf.orbital_energies, sys.rhf.n_occ);
    CHECK(std::abs(cc.e_total - ref) < 1e-6);
  }
}

TEST_CASE("CCSD correlation energy ordering for H2O") {
  const auto& sys = testing::prepared("h2o");
  Mp2Result mp2 = mp2_amplitudes(sys.mo, sys.rhf.orbital_energies, sys.rhf.n_occ);
  CcsdResult cc = ccsd_solve(sys.mo, sys.rhf.orbital_energies, sys.rhf.n_occ);
  const double e_fci = fci_total_energy(sys.mo, 5, 5);
  const double corr_mp2 = mp2.e_mp2;
  const double corr_cc = cc.e_total - sys.rhf.e_total;
  const double corr_fci = e_fci - sys.rhf.e_total;
  // |MP2| < |CCSD| < |FCI| here; all negative
  CHECK(corr_mp2 < 0.0);
  CHECK(corr_cc < corr_mp2);
  CHECK(corr_fci < corr_cc);
}

TEST_CASE("CCSD lambda densities reproduce the projective energy") {
  const auto& sys = testing::prepared("h2o");
  CcsdResult cc = ccsd_solve(sys.mo, sys.rhf.orbital_energies, sys.rhf.n_occ);
  RdmSet rdms = ccsd_rdms(sys.mo, sys.rhf.orbital_energies, sys.rhf.n_occ,
                          cc.amplitudes);
  const double e_from_rdm = energy_from_rdms(sys.mo, rdms) + sys.mo.e_core;
  CHECK(std::abs(e_from_rdm - cc.e_total) < 1e-7);
  CHECK(rdms.rdm1.trace() == doctest::Approx(10.0).epsilon(1e-8));
  CHECK((rdms.rdm1 - rdms.rdm1.transpose()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("CCSD densities equal FCI densities for two electrons") {
  const auto& sys = testing::prepared("h2");
  CcsdResult cc = ccsd_solve(sys.mo, sys.rhf.orbital_energies, 1);
  RdmSet rdms = ccsd_rdms(sys.mo, sys.rhf.orbital_energies, 1, cc.amplitudes);
  SpectralResult fci = fci_ground_state(sys.mo, 1, 1);
  CHECK((rdms.rdm1 - fci.rdm1).cwiseAbs().maxCoeff() < 1e-6);
  double worst = 0.0;
  for (std::size_t i = 0; i < rdms.rdm2.size(); ++i)
    worst = std::max(worst, std::abs(rdms.rdm2[i] - fci.rdm2[i]));
  CHECK(worst < 1e-6);
}

TEST_CASE("t2 permutation symmetry of the stored convention") {
  const auto& sys = testing::prepared("h2o");
  CcsdResult cc = ccsd_solve(sys.mo, sys.rhf.orbital_energies, sys.rhf.n_occ);
  const auto& a = cc.amplitudes;
  for (int i = 0; i < a.n_occ; ++i)
    for (int j = 0; j < a.n_occ; ++j)
      for (int p = 0; p < a.n_virt; ++p)
        for (int q = 0; q < a.n_virt; ++q) {
          CHECK(a.t2_os(i, j, p, q) ==
                doctest::Approx(a.t2_os(j, i, q, p)).epsilon(1e-6));
          // antisymmetry of the derived same-spin block
          CHECK(a.t2_ss(i, j, p, q) ==
                doctest::Approx(-a.t2_ss(i, j, q, p)).epsilon(1e-6));
        }
}

TEST_CASE("amplitude file round trip") {
  const auto& sys = testing::prepared("h2");
  CcsdResult cc = ccsd_solve(sys.mo, sys.rhf.orbital_energies, 1);
  const std::string path = "amps_test.json";
  save_amplitudes_json(path, cc.amplitudes);
  Amplitudes back = load_amplitudes_json(path);
  CHECK(back.n_occ == cc.amplitudes.n_occ);
  CHECK(back.n_virt == cc.amplitudes.n_virt);
  CHECK(back.source == Amplitudes::Source::ccsd);
  for (std::size_t i = 0; i < back.t2.size(); ++i)
    CHECK(back.t2[i] == doctest::Approx(cc.amplitudes.t2[i]).epsilon(1e-14));
  std::remove(path.c_str());
}
