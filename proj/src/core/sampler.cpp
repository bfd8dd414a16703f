#include "core/sampler.hpp"

#include <algorithm>
#include <fstream>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace sqdw {

namespace {

std::uint64_t draw_from_cdf(const std::vector<double>& cdf, Rng& rng) {
  const double u = rng.next_double() * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  return static_cast<std::uint64_t>(it - cdf.begin());
}

std::vector<double> cdf_of(const std::vector<double>& probs) {
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }
  return cdf;
}

std::uint64_t apply_readout(std::uint64_t word, int n_qubits, double p,
                            Rng& rng) {
  for (int q = 0; q < n_qubits; ++q)
    if (rng.next_double() < p) word ^= 1ull << q;
  return word;
}

const char* kPauli = "XYZ";

void apply_pauli(Statevector& sv, int q, char p) {
  switch (p) {
    case 'X':
      sv.apply_x(q);
      break;
    case 'Y': {
      const cxd m[4] = {0.0, cxd(0.0, -1.0), cxd(0.0, 1.0), 0.0};
      sv.apply_1q(q, m);
      break;
    }
    case 'Z':
      sv.apply_phase(q, -1.0);
      break;
  }
}

}  // namespace

Counts sample_counts(const Statevector& state, long n_shots,
                     std::uint64_t seed, const NoiseModel& noise) {
  require(n_shots >= 1, ErrorKind::invalid_argument, "need at least one shot");
  require(!noise.any() || noise.two_qubit_depolarizing == 0.0,
          ErrorKind::invalid_argument,
          "depolarizing noise requires the circuit sampler");
  Counts out;
  out.n_qubits = state.n_qubits();
  out.total = n_shots;

  Rng rng(seed);
  const std::vector<double> cdf = cdf_of(state.probabilities());
  const double p_ro = noise.enabled ? noise.readout_flip : 0.0;
  for (long s = 0; s < n_shots; ++s) {
    std::uint64_t word = draw_from_cdf(cdf, rng);
    if (p_ro > 0.0) word = apply_readout(word, out.n_qubits, p_ro, rng);
    ++out.freq[word];
  }
  return out;
}

Counts sample_circuit(const CircuitDesc& circuit, long n_shots,
                      std::uint64_t seed, const NoiseModel& noise) {
  require(n_shots >= 1, ErrorKind::invalid_argument, "need at least one shot");
  const double p2 = noise.enabled ? noise.two_qubit_depolarizing : 0.0;
  const double p_ro = noise.enabled ? noise.readout_flip : 0.0;

  Counts out;
  out.n_qubits = circuit.n_qubits;
  out.total = n_shots;
  Rng rng(seed);

  Statevector clean(circuit.n_qubits);
  clean.set_basis_state(0);
  run_circuit(circuit, clean);
  const std::vector<double> clean_cdf = cdf_of(clean.probabilities());

  if (p2 <= 0.0) {
    for (long s = 0; s < n_shots; ++s) {
      std::uint64_t word = draw_from_cdf(clean_cdf, rng);
      if (p_ro > 0.0) word = apply_readout(word, out.n_qubits, p_ro, rng);
      ++out.freq[word];
    }
    return out;
  }

  // trajectory sampling: per shot, draw Pauli insertions after each
  // CZ-equivalent of every multi-qubit gate; clean trajectories reuse the
  // noiseless state
  for (long s = 0; s < n_shots; ++s) {
    // first decide the insertion pattern for this shot
    struct Insertion {
      std::size_t gate_index;
      char pa, pb;  // Pauli on q0-side and q1-side ('I' allowed)
    };
    std::vector<Insertion> insertions;
    for (std::size_t gi = 0; gi < circuit.gates.size(); ++gi) {
      const int reps = cz_equivalents(circuit.gates[gi]);
      for (int k = 0; k < reps; ++k) {
        if (rng.next_double() >= p2) continue;
        // uniform over the 15 non-identity two-qubit Paulis
        const int pick = static_cast<int>(rng.next_below(15)) + 1;
        const int ia = pick / 4, ib = pick % 4;
        insertions.push_back({gi, ia == 0 ? 'I' : kPauli[ia - 1],
                              ib == 0 ? 'I' : kPauli[ib - 1]});
      }
    }

    std::uint64_t word;
    if (insertions.empty()) {
      word = draw_from_cdf(clean_cdf, rng);
    } else {
      Statevector sv(circuit.n_qubits);
      sv.set_basis_state(0);
      std::size_t next = 0;
      for (std::size_t gi = 0; gi < circuit.gates.size(); ++gi) {
        CircuitDesc one{circuit.n_qubits, {circuit.gates[gi]}};
        run_circuit(one, sv);
        while (next < insertions.size() && insertions[next].gate_index == gi) {
          const Gate& g = circuit.gates[gi];
          const int qa = g.q0;
          const int qb = g.q1 >= 0
                             ? g.q1
                             : (g.controls.empty() ? g.q0 : g.controls[0]);
          if (insertions[next].pa != 'I') apply_pauli(sv, qa, insertions[next].pa);
          if (insertions[next].pb != 'I') apply_pauli(sv, qb, insertions[next].pb);
          ++next;
        }
      }
      const std::vector<double> cdf = cdf_of(sv.probabilities());
      word = draw_from_cdf(cdf, rng);
    }
    if (p_ro > 0.0) word = apply_readout(word, out.n_qubits, p_ro, rng);
    ++out.freq[word];
  }
  return out;
}

std::string basis_index_to_string(std::uint64_t index, int n_qubits) {
  std::string s(n_qubits, '0');
  for (int q = 0; q < n_qubits; ++q)
    if (index >> q & 1ull) s[n_qubits - 1 - q] = '1';
  return s;
}

std::uint64_t string_to_basis_index(const std::string& s) {
  std::uint64_t idx = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    require(s[k] == '0' || s[k] == '1', ErrorKind::parse,
            "bitstring must contain only 0/1");
    if (s[k] == '1') idx |= 1ull << (s.size() - 1 - k);
  }
  return idx;
}

void save_counts(const std::string& path, const Counts& counts) {
  std::ofstream out(path);
  require(out.good(), ErrorKind::io, "cannot open " + path + " for writing");
  for (const auto& [word, n] : counts.freq)
    out << basis_index_to_string(word, counts.n_qubits) << " " << n << "\n";
}

Counts load_counts(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::io, "cannot open " + path);
  Counts counts;
  std::string word;
  long n;
  while (in >> word >> n) {
    require(n >= 0, ErrorKind::parse, "negative count");
    if (counts.n_qubits == 0)
      counts.n_qubits = static_cast<int>(word.size());
    require(static_cast<int>(word.size()) == counts.n_qubits, ErrorKind::parse,
            "inconsistent bitstring lengths in counts file");
    counts.freq[string_to_basis_index(word)] += n;
    counts.total += n;
  }
  require(counts.total > 0, ErrorKind::parse, "empty counts file");
  return counts;
}

}  // namespace sqdw
