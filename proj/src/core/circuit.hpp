#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/statevector.hpp"

namespace sqdw {

// Logical circuit description shared by resource estimation and the
// trajectory-noise sampler. Gates are exact unitaries; lowering to the
// {R, CZ} native set happens only inside estimate_resources.
struct Gate {
  enum class Kind { x, r, phase1q, cx, cz, cp, givens, mcry };
  Kind kind;
  int q0 = -1;
  int q1 = -1;
  double angle = 0.0;            // cp / mcry
  Eigen::Matrix2cd block;        // r (1q unitary) / givens (two-mode block)
  cxd phase{1.0, 0.0};           // phase1q
  std::vector<int> controls;     // mcry
  std::vector<bool> control_pol;
};

struct CircuitDesc {
  int n_qubits = 0;
  std::vector<Gate> gates;
};

struct ResourceReport {
  int n_qubits = 0;
  int n_params = 0;
  long r = 0;
  long cz = 0;
  long move = 0;
  long total_1q = 0;
  long total_2q = 0;
  long total = 0;
  long depth = 0;
};

// Applies the circuit to |0...0> (or continues from the provided state).
void run_circuit(const CircuitDesc& circuit, Statevector& sv);

// CZ-equivalent count of one gate under the documented lowering rules.
int cz_equivalents(const Gate& g);

// Logical {R, CZ} lowering with adjacent single-qubit merging, MOVE counts
// from the star-topology rule (1 CZ = shuttle one operand to the central
// resonator and back, adjacent shuttles of the same qubit merged), and ASAP
// depth over qubits + resonator.
ResourceReport estimate_resources(const CircuitDesc& circuit, int n_params);

}  // namespace sqdw
