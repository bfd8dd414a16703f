#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace sqdw {

using cxd = std::complex<double>;

// Dense statevector over 2^n_qubits amplitudes, qubit q = bit q of the basis
// index. Fermionic mode q maps to qubit q (modes [alpha 0..n-1, beta 0..n-1]).
class Statevector {
 public:
  explicit Statevector(int n_qubits);

  int n_qubits() const { return n_; }
  std::vector<cxd>& amps() { return amps_; }
  const std::vector<cxd>& amps() const { return amps_; }
  double norm() const;

  void set_basis_state(std::uint64_t index);

  void apply_x(int q);
  void apply_1q(int q, const cxd m[4]);  // row-major [[m0,m1],[m2,m3]]
  void apply_cx(int control, int target);
  void apply_cz(int a, int b);
  void apply_phase(int q, cxd phase);    // diag(1, phase)

  // Controlled-Ry(theta) on target with positive/negative controls; controls
  // and polarities aligned by index.
  void apply_controlled_ry(const std::vector<int>& controls,
                           const std::vector<bool>& positive, int target,
                           double theta);

  // Fermionic two-mode block on adjacent modes (q, q+1): the one-particle
  // 2x2 unitary g acts on the span of singly occupied states (amplitudes
  // ordered [mode q occupied, mode q+1 occupied]); |11> picks up det(g).
  void apply_two_mode_block(int q, const Eigen::Matrix2cd& g);

  // exp(i * phase[basis]) with caller-supplied diagonal
  void apply_diagonal_phases(const std::vector<double>& phase);

  // probability-weighted measurement distribution
  std::vector<double> probabilities() const;

 private:
  int n_;
  std::vector<cxd> amps_;
};

// Sequence of adjacent two-mode blocks + final mode phases reproducing a
// one-particle unitary: Gamma(u) = G_1 ... G_k D. Blocks are returned in
// application order (G_k applied first is last in the vector? no:
// apply in the returned order, phases last).
struct GivensDecomposition {
  struct Block {
    int mode;  // acts on (mode, mode + 1)
    Eigen::Matrix2cd g;
  };
  std::vector<Block> blocks;      // apply in order
  std::vector<cxd> mode_phases;   // then phase per occupied mode
};

GivensDecomposition givens_decompose(const Eigen::MatrixXcd& u);

// Applies Gamma(u) restricted to one spin sector whose modes start at
// `mode_offset` (alpha: 0, beta: n_orb).
void apply_orbital_rotation(Statevector& sv, const Eigen::MatrixXcd& u,
                            int mode_offset);

}  // namespace sqdw
