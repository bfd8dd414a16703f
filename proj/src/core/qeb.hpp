#pragma once

#include <vector>

#include "core/circuit.hpp"
#include "core/mp2.hpp"
#include "core/statevector.hpp"

namespace sqdw {

// Qubit-excitation-based UCCSD with linear-CNOT excitation gates. Indices are
// Jordan-Wigner qubit (spin-orbital mode) indices; the rotation angle theta
// feeds the controlled-Ry directly, so a lone excitation produces amplitude
// sin(theta/2) on the excited determinant.
struct QebParams {
  struct Single {
    int i, a;  // occupied mode -> virtual mode, same spin
    double theta;
  };
  struct Double {
    int i, j, a, b;  // (i -> a), (j -> b)
    double theta;
  };
  int n_orb = 0;
  std::vector<Single> singles;
  std::vector<Double> doubles;
};

// Excitation list in singles-then-doubles lexicographic order with angles
// 2 * t from the given amplitudes (t1 for singles; opposite-spin and derived
// same-spin t2 for doubles).
QebParams qeb_params_from_amplitudes(const Amplitudes& amps, int n_orb);

Statevector prepare_lcnot_uccsd_state(int n_orb, int n_alpha, int n_beta,
                                      const QebParams& params);

// Gate-level form of the same state (resources, noise trajectories).
CircuitDesc qeb_circuit(int n_orb, int n_alpha, int n_beta,
                        const QebParams& params);

inline int qeb_parameter_count(const QebParams& p) {
  return static_cast<int>(p.singles.size() + p.doubles.size());
}

// The dense matrices of the two excitation gates on their local qubits,
// ordered (a, i) and (b, a, j, i); used for spot checks.
Eigen::Matrix4cd qeb_single_gate_matrix(double theta);
Eigen::MatrixXcd qeb_double_gate_matrix(double theta);

}  // namespace sqdw
