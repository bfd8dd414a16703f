#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdio>

#include "core/ccsd.hpp"
#include "core/circuit.hpp"
#include "core/detspace.hpp"
#include "core/error.hpp"
#include "core/fci.hpp"
#include "core/lucj.hpp"
#include "core/qeb.hpp"
#include "core/rng.hpp"
#include "core/sampler.hpp"
#include "core/statevector.hpp"
#include "support/oracles.hpp"
#include "support/reference_systems.hpp"

using namespace sqdw;

namespace {

Eigen::MatrixXcd random_unitary(int n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = cxd(2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  return qr.householderQ();
}

// overlap of a statevector with a sector vector over a DetSpace
double overlap2_with(const Statevector& sv, const DetSpace& space,
                     const std::vector<double>& v) {
  cxd acc = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i)
    acc += std::conj(sv.amps()[determinant_to_basis_index(space[i], space.n_orb)]) *
           v[i];
  return std::norm(acc);
}

double sector_probability(const Statevector& sv, int n_orb, int na, int nb) {
  double p = 0.0;
  for (std::uint64_t idx = 0; idx < sv.amps().size(); ++idx) {
    const Determinant d = basis_index_to_determinant(idx, n_orb);
    if (std::popcount(d.alpha) == na && std::popcount(d.beta) == nb)
      p += std::norm(sv.amps()[idx]);
  }
  return p;
}

}  // namespace

TEST_CASE("orbital rotation matches the determinant-minor oracle") {
  const int n = 4;
  Eigen::MatrixXcd u = random_unitary(n, 42);
  for (int nelec : {1, 2, 3}) {
    // start from each basis determinant of the sector, one spin sector only
    const auto halves = enumerate_half_strings(n, nelec);
    for (std::uint32_t ket : halves) {
      Statevector sv(2 * n);
      sv.set_basis_state(determinant_to_basis_index({ket, 0}, n));
      apply_orbital_rotation(sv, u, 0);
      CHECK(std::abs(sv.norm() - 1.0) < 1e-10);
      for (std::uint32_t bra : halves) {
        const cxd expect = testing::rotation_amplitude_minor(u, bra, ket);
        const cxd got =
            sv.amps()[determinant_to_basis_index({bra, 0}, n)];
        CHECK(std::abs(expect - got) < 1e-10);
      }
    }
  }
}

TEST_CASE("paired rotations cancel") {
  Eigen::MatrixXcd u = random_unitary(5, 7);
  Statevector sv(10);
  sv.set_basis_state(determinant_to_basis_index({0b10011u, 0b00101u}, 5));
  Statevector ref = sv;
  apply_orbital_rotation(sv, u, 0);
  apply_orbital_rotation(sv, u.adjoint(), 0);
  double worst = 0.0;
  for (std::size_t i = 0; i < sv.amps().size(); ++i)
    worst = std::max(worst, std::abs(sv.amps()[i] - ref.amps()[i]));
  CHECK(worst < 1e-9);
}

TEST_CASE("lucj: zero amplitudes give the HF basis state") {
  Amplitudes amps;
  amps.n_occ = 2;
  amps.n_virt = 2;
  amps.t1 = Eigen::MatrixXd::Zero(2, 2);
  amps.t2.assign(16, 0.0);
  LucjParams p = lucj_params_from_t2(amps, 4, 1);
  CHECK(p.layers.empty());
  Statevector sv = prepare_lucj_state(4, 2, 2, p);
  const auto hf = determinant_to_basis_index({0b0011u, 0b0011u}, 4);
  CHECK(std::abs(sv.amps()[hf] - cxd(1.0, 0.0)) < 1e-12);
}

TEST_CASE("lucj conserves particle number exactly") {
  const auto& sys = testing::prepared("lih");
  CcsdResult cc = ccsd_solve(sys.mo, sys.rhf.orbital_energies, sys.rhf.n_occ);
  LucjParams p = lucj_params_from_t2(cc.amplitudes, sys.mo.n_orb, 1);
  REQUIRE(p.layers.size() >= 1);
  CHECK((p.layers[0].t_generator + p.layers[0].t_generator.adjoint())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  Statevector sv = prepare_lucj_state(sys.mo.n_orb, 2, 2, p);
  CHECK(std::abs(sv.norm() - 1.0) < 1e-10);
  CHECK(sector_probability(sv, sys.mo.n_orb, 2, 2) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("lucj from CCSD t2 overlaps the FCI ground state (H2)") {
  const auto& sys = testing::prepared("h2");
  CcsdResult cc = ccsd_solve(sys.mo, sys.rhf.orbital_energies, 1);
  LucjParams p = lucj_params_from_t2(cc.amplitudes, 2, 1);
  Statevector sv = prepare_lucj_state(2, 1, 1, p);

  DetSpace space = enumerate_symmetry_space(2, 1, 1);
  SpectralResult fci = fci_ground_state(sys.mo, 1, 1);
  const double o2 = overlap2_with(sv, space, fci.ground_vector);
  CHECK(o2 > 0.99);
}

TEST_CASE("lucj construction is invariant to amplitude-layout permutations") {
  // feeding the same physical t2 through its (ijab) <-> (jiba) symmetry
  // must give identical layers
  const auto& sys = testing::prepared("lih");
  CcsdResult cc = ccsd_solve(sys.mo, sys.rhf.orbital_energies, sys.rhf.n_occ);
  Amplitudes swapped = cc.amplitudes;
  for (int i = 0; i < swapped.n_occ; ++i)
    for (int j = 0; j < swapped.n_occ; ++j)
      for (int a = 0; a < swapped.n_virt; ++a)
        for (int b = 0; b < swapped.n_virt; ++b)
          swapped.t2_ref(i, j, a, b) = cc.amplitudes.t2_os(j, i, b, a);
  LucjParams p1 = lucj_params_from_t2(cc.amplitudes, sys.mo.n_orb, 1);
  LucjParams p2 = lucj_params_from_t2(swapped, sys.mo.n_orb, 1);
  CHECK((p1.layers[0].j_aa - p2.layers[0].j_aa).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("lucj gate path equals operator path") {
  const auto& sys = testing::prepared("h2");
  CcsdResult cc = ccsd_solve(sys.mo, sys.rhf.orbital_energies, 1);
  LucjParams p = lucj_params_from_t2(cc.amplitudes, 2, 1);

  Statevector op_path = prepare_lucj_state(2, 1, 1, p);
  CircuitDesc circ = lucj_circuit(2, 1, 1, p);
  Statevector gate_path(4);
  gate_path.set_basis_state(0);
  run_circuit(circ, gate_path);

  for (std::size_t i = 0; i < op_path.amps().size(); ++i)
    CHECK(std::abs(op_path.amps()[i] - gate_path.amps()[i]) < 1e-10);
}

TEST_CASE("qeb single-excitation gate matches the explicit matrix product") {
  const double theta = 0.731;
  Eigen::Matrix4cd m = qeb_single_gate_matrix(theta);

  // oracle: multiply the three gate matrices by hand (basis |q_a q_i>)
  Eigen::Matrix4cd cx = Eigen::Matrix4cd::Zero();  // control a (bit 1), target i
  cx(0, 0) = cx(1, 1) = 1.0;
  cx(2, 3) = cx(3, 2) = 1.0;
  Eigen::Matrix4cd cry = Eigen::Matrix4cd::Zero();  // Ry on a controlled by i
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  cry(0, 0) = cry(2, 2) = 1.0;
  cry(1, 1) = c;
  cry(1, 3) = -s;
  cry(3, 1) = s;
  cry(3, 3) = c;
  Eigen::Matrix4cd ref = cx * cry * cx;
  CHECK((m - ref).cwiseAbs().maxCoeff() < 1e-12);

  // amplitude split between |01> and |10>
  Eigen::Vector4cd in = Eigen::Vector4cd::Zero();
  in(1) = 1.0;  // |q_a q_i> = |01>
  Eigen::Vector4cd out = m * in;
  CHECK(std::abs(out(1) - cxd(c, 0)) < 1e-12);
  CHECK(std::abs(out(2) - cxd(s, 0)) < 1e-12);
}

TEST_CASE("qeb double gate moves HF weight onto the target configuration") {
  const double theta = 0.4;
  Eigen::MatrixXcd m = qeb_double_gate_matrix(theta);
  // |q_b q_a q_j q_i> = |0011>
  Eigen::VectorXcd in = Eigen::VectorXcd::Zero(16);
  in(0b0011) = 1.0;
  Eigen::VectorXcd out = m * in;
  CHECK(std::abs(out(0b0011) - cxd(std::cos(theta / 2), 0)) < 1e-12);
  CHECK(std::abs(out(0b1100) - cxd(std::sin(theta / 2), 0)) < 1e-12);
  // unitarity
  CHECK((m.adjoint() * m - Eigen::MatrixXcd::Identity(16, 16))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("lcnot-uccsd with zero angles is the HF state") {
  QebParams p;
  p.n_orb = 4;
  p.singles = {{0, 2, 0.0}, {4, 6, 0.0}};
  p.doubles = {{0, 4, 2, 6, 0.0}};
  Statevector sv = prepare_lcnot_uccsd_state(4, 2, 2, p);
  CHECK(std::abs(sv.amps()[determinant_to_basis_index({0b0011u, 0b0011u}, 4)] -
                 cxd(1.0, 0.0)) < 1e-12);
}

TEST_CASE("lcnot-uccsd from MP2 overlaps FCI and conserves numbers") {
  const auto& sys = testing::prepared("lih");
  Mp2Result mp2 = mp2_amplitudes(sys.mo, sys.rhf.orbital_energies, sys.rhf.n_occ);
  QebParams p = qeb_params_from_amplitudes(mp2.amplitudes, sys.mo.n_orb);
  Statevector sv = prepare_lcnot_uccsd_state(sys.mo.n_orb, 2, 2, p);

  CHECK(std::abs(sv.norm() - 1.0) < 1e-10);
  CHECK(sector_probability(sv, sys.mo.n_orb, 2, 2) ==
        doctest::Approx(1.0).epsilon(1e-10));

  DetSpace space = enumerate_symmetry_space(sys.mo.n_orb, 2, 2);
  SpectralResult fci = fci_ground_state(sys.mo, 2, 2);
  CHECK(overlap2_with(sv, space, fci.ground_vector) > 0.9);

  // overlapping indices within one gate are rejected
  QebParams bad;
  bad.n_orb = 4;
  bad.doubles = {{0, 0, 2, 6, 0.1}};
  CHECK_THROWS_AS(prepare_lcnot_uccsd_state(4, 2, 2, bad), Error);
}

TEST_CASE("sampling: single basis state and conservation") {
  Statevector sv(4);
  sv.set_basis_state(0b0101);
  Counts c = sample_counts(sv, 500, 9);
  CHECK(c.freq.size() == 1);
  CHECK(c.freq.at(0b0101) == 500);
  long total = 0;
  for (auto& [k, v] : c.freq) total += v;
  CHECK(total == c.total);
}

TEST_CASE("sampling is deterministic given the seed") {
  const auto& sys = testing::prepared("h2");
  CcsdResult cc = ccsd_solve(sys.mo, sys.rhf.orbital_energies, 1);
  LucjParams p = lucj_params_from_t2(cc.amplitudes, 2, 1);
  Statevector sv = prepare_lucj_state(2, 1, 1, p);
  Counts a = sample_counts(sv, 2000, 1234);
  Counts b = sample_counts(sv, 2000, 1234);
  CHECK(a.freq == b.freq);
  Counts c = sample_counts(sv, 2000, 1235);
  CHECK(a.freq != c.freq);
}

TEST_CASE("readout flips produce the expected corruption rate") {
  Statevector sv(10);
  sv.set_basis_state(0b0000011111);
  NoiseModel noise;
  noise.enabled = true;
  noise.readout_flip = 0.05;
  const long shots = 100000;
  Counts c = sample_counts(sv, shots, 77, noise);
  long flipped = 0;
  for (const auto& [word, n] : c.freq)
    if (word != 0b0000011111ull) flipped += n;
  const double p_clean = std::pow(0.95, 10);
  const double expect = shots * (1.0 - p_clean);
  const double sigma = std::sqrt(shots * p_clean * (1 - p_clean));
  CHECK(std::abs(flipped - expect) < 3.0 * sigma);
}

TEST_CASE("counts file round trip") {
  Statevector sv(4);
  sv.set_basis_state(0b0101);
  Counts c = sample_counts(sv, 10, 3);
  save_counts("counts_test.txt", c);
  Counts back = load_counts("counts_test.txt");
  CHECK(back.n_qubits == 4);
  CHECK(back.freq == c.freq);
  CHECK(back.total == c.total);
  std::remove("counts_test.txt");

  // convention: alpha in the right half
  CHECK(basis_index_to_string(determinant_to_basis_index({0b01u, 0b10u}, 2), 4) ==
        "1001");
}

TEST_CASE("resource estimation basics") {
  CircuitDesc empty{4, {}};
  ResourceReport r0 = estimate_resources(empty, 0);
  CHECK(r0.cz == 0);
  CHECK(r0.r == 0);
  CHECK(r0.move == 0);
  CHECK(r0.depth == 0);

  CircuitDesc one{4, {Gate{.kind = Gate::Kind::cz, .q0 = 0, .q1 = 2}}};
  ResourceReport r1 = estimate_resources(one, 0);
  CHECK(r1.cz == 1);
  CHECK(r1.move == 2);
}

TEST_CASE("H2 lucj resources are in the neighborhood of the hardware row") {
  // informational comparison (R 35, CZ 18, Move 32, depth 64)
  const auto& sys = testing::prepared("h2");
  CcsdResult cc = ccsd_solve(sys.mo, sys.rhf.orbital_energies, 1);
  LucjParams p = lucj_params_from_t2(cc.amplitudes, 2, 1);
  CircuitDesc circ = lucj_circuit(2, 1, 1, p);
  ResourceReport rep = estimate_resources(circ, lucj_parameter_count(p));
  MESSAGE("H2 LUCJ logical resources: R=", rep.r, " CZ=", rep.cz,
          " Move=", rep.move, " depth=", rep.depth);
  CHECK(rep.cz > 0);
  CHECK(rep.move >= 2);
  CHECK(rep.depth > 0);
}
