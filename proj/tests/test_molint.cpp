#include <doctest.h>

#include <cmath>

#include "core/basis.hpp"
#include "core/boys.hpp"
#include "core/constants.hpp"
#include "core/error.hpp"
#include "core/integrals.hpp"
#include "core/molecule.hpp"
#include "support/oracles.hpp"
#include "support/reference_systems.hpp"

using namespace sqdw;

namespace {

// closed-form (ss|ss) oracle over contracted s functions on two centers
double contracted_ssss(const std::vector<double>& e, const std::vector<double>& c,
                       double r) {
  double acc = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      for (std::size_t k = 0; k < e.size(); ++k)
        for (std::size_t l = 0; l < e.size(); ++l) {
          const double p = e[i] + e[j], q = e[k] + e[l];
          const double mu1 = e[i] * e[j] / p, mu2 = e[k] * e[l] / q;
          // both pairs on centers (0, r): P and Q along the axis
          const double P = e[j] * r / p;   // center A at 0, B at r
          const double Q = e[l] * r / q;
          const double rho = p * q / (p + q);
          const double pref = 2.0 * std::pow(M_PI, 2.5) / (p * q * std::sqrt(p + q));
          acc += c[i] * c[j] * c[k] * c[l] * pref *
                 std::exp(-mu1 * r * r) * std::exp(-mu2 * r * r) *
                 boys(0, rho * (P - Q) * (P - Q));
        }
  return acc;
}

BasisShell normalized_h_shell() {
  Molecule m = parse_geometry("H 0 0 0", LengthUnit::bohr, 0);
  return build_basis(m, "sto-3g").shells[0];
}

}  // namespace

TEST_CASE("parse_geometry benchmark inputs") {
  Molecule h2 = parse_geometry(
      "H -8.0563 4.7154 0.0 / H -8.5983 4.7845 -0.3333", LengthUnit::angstrom, 0);
  CHECK(h2.atoms.size() == 2);
  CHECK(h2.n_electrons == 2);
  CHECK(h2.atoms[0].xyz[0] == doctest::Approx(-8.0563 * kAngstromToBohr));

  Molecule hehp =
      parse_geometry("He 0 0 0 / H 0 0 0.5500", LengthUnit::angstrom, 1);
  CHECK(hehp.atoms.size() == 2);
  CHECK(hehp.n_electrons == 2);

  CHECK_THROWS_AS(parse_geometry("", LengthUnit::angstrom, 0), Error);
  CHECK_THROWS_AS(parse_geometry("Xx 0 0 0", LengthUnit::angstrom, 0), Error);
  CHECK_THROWS_AS(parse_geometry("H 0 0", LengthUnit::angstrom, 0), Error);
  // coincident atoms
  CHECK_THROWS_AS(parse_geometry("H 0 0 0\nH 0 0 0", LengthUnit::bohr, 0), Error);
}

TEST_CASE("contracted shells are unit normalized") {
  for (const char* sym : {"H", "He", "Li", "Be", "C", "N", "O", "S", "Cl"}) {
    Molecule m = parse_geometry(std::string(sym) + " 0 0 0", LengthUnit::bohr,
                                element_z(sym) % 2);
    BasisSet b = build_basis(m, "sto-3g");
    for (const auto& sh : b.shells)
      CHECK(shell_self_overlap(sh) == doctest::Approx(1.0).epsilon(1e-12));
  }
  Molecule h = parse_geometry("H 0 0 0", LengthUnit::bohr, 1);
  for (const auto& sh : build_basis(h, "6-31g").shells)
    CHECK(shell_self_overlap(sh) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("single H atom AO matrix") {
  Molecule m = parse_geometry("H 0 0 0", LengthUnit::bohr, 1);
  AOBundle ao = compute_ao_integrals(m, "sto-3g");
  CHECK(ao.n_ao == 1);
  CHECK(std::abs(ao.S(0, 0) - 1.0) < 1e-12);
}

TEST_CASE("H2 at 1.4 bohr against closed-form s-integral oracles") {
  Molecule m = parse_geometry("H 0 0 0\nH 0 0 1.4", LengthUnit::bohr, 0);
  AOBundle ao = compute_ao_integrals(m, "sto-3g");

  CHECK(ao.e_nuc == doctest::Approx(1.0 / 1.4).epsilon(1e-14));

  BasisShell sh = normalized_h_shell();
  const double s01 = testing::contracted_s_overlap(
      sh.exponents, sh.coefficients, sh.exponents, sh.coefficients, 1.4);
  // independent-oracle value; for the record, s01 ~ 0.65 at this distance
  CHECK(std::abs(ao.S(0, 1) - s01) < 1e-12);
  CHECK(s01 > 0.5);
  CHECK(s01 < 0.8);

  const double g0000 = contracted_ssss(sh.exponents, sh.coefficients, 0.0);
  CHECK(std::abs(ao.eri.get(0, 0, 0, 0) - g0000) < 1e-12);
}

TEST_CASE("same-center s and p functions are orthogonal") {
  Molecule m = parse_geometry("O 0 0 0", LengthUnit::bohr, 0);
  AOBundle ao = compute_ao_integrals(m, "sto-3g");
  CHECK(ao.n_ao == 5);
  for (int p = 2; p < 5; ++p) {
    CHECK(std::abs(ao.S(0, p)) < 1e-14);
    CHECK(std::abs(ao.S(1, p)) < 1e-14);
    CHECK(std::abs(ao.S(p, p) - 1.0) < 1e-12);
  }
  // p_x / p_y / p_z are related by symmetry
  CHECK(ao.hcore(2, 2) == doctest::Approx(ao.hcore(3, 3)).epsilon(1e-12));
  CHECK(ao.hcore(2, 2) == doctest::Approx(ao.hcore(4, 4)).epsilon(1e-12));
}

TEST_CASE("translation invariance of integrals") {
  Molecule m = testing::load_molecule("h2o");
  AOBundle a = compute_ao_integrals(m, "sto-3g");
  Molecule shifted = translated(m, {3.7, -1.2, 0.9});
  AOBundle b = compute_ao_integrals(shifted, "sto-3g");

  CHECK((a.S - b.S).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((a.hcore - b.hcore).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(std::abs(a.e_nuc - b.e_nuc) < 1e-12);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.eri.raw().size(); ++i)
    worst = std::max(worst, std::abs(a.eri.raw()[i] - b.eri.raw()[i]));
  CHECK(worst < 1e-10);
}

TEST_CASE("eri permutational symmetry is exact as stored") {
  const auto& sys = testing::prepared("h2o");
  // expanding packed storage through the accessor and re-packing is the
  // identity by construction; check a few explicit permutations
  const int n = sys.ao.n_ao;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s <= r; ++s) {
          const double v = sys.ao.eri.get(p, q, r, s);
          CHECK(sys.ao.eri.get(q, p, r, s) == v);
          CHECK(sys.ao.eri.get(p, q, s, r) == v);
          CHECK(sys.ao.eri.get(r, s, p, q) == v);
        }
}

TEST_CASE("unsupported basis and element requests fail") {
  Molecule m = parse_geometry("O 0 0 0", LengthUnit::bohr, 0);
  CHECK_THROWS_AS(compute_ao_integrals(m, "cc-pvdz"), Error);
  CHECK_THROWS_AS(compute_ao_integrals(m, "6-31g"), Error);  // O not tabulated
}
