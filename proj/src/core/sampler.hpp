#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "core/circuit.hpp"
#include "core/statevector.hpp"

namespace sqdw {

// Hardware-noise stand-in: two-qubit depolarizing insertions per shot
// trajectory plus independent readout bit flips.
struct NoiseModel {
  double two_qubit_depolarizing = 0.0;  // per CZ-equivalent, in [0, 1]
  double readout_flip = 0.0;            // per bit, in [0, 0.5]
  bool enabled = false;

  bool any() const {
    return enabled && (two_qubit_depolarizing > 0.0 || readout_flip > 0.0);
  }
};

// Measurement record: basis index -> frequency; deterministic iteration
// order so downstream processing replays exactly.
struct Counts {
  int n_qubits = 0;
  std::map<std::uint64_t, long> freq;
  long total = 0;
};

// Multinomial draw from |amplitude|^2, with optional readout flips. The
// depolarizing channel needs the circuit, not the state; use sample_circuit.
Counts sample_counts(const Statevector& state, long n_shots,
                     std::uint64_t seed, const NoiseModel& noise = {});

// Full sampling path: runs the circuit per Pauli-insertion trajectory when
// depolarizing noise is on, otherwise simulates once.
Counts sample_circuit(const CircuitDesc& circuit, long n_shots,
                      std::uint64_t seed, const NoiseModel& noise = {});

// Text exchange format: one `bitstring count` per line, bitstrings in the
// beta-half/alpha-half convention, sorted.
void save_counts(const std::string& path, const Counts& counts);
Counts load_counts(const std::string& path);

std::string basis_index_to_string(std::uint64_t index, int n_qubits);
std::uint64_t string_to_basis_index(const std::string& s);

}  // namespace sqdw
