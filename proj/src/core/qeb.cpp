#include "core/qeb.hpp"

#include "core/detspace.hpp"
#include "core/error.hpp"

namespace sqdw {

namespace {

void apply_single_gate(Statevector& sv, int a, int i, double theta) {
  sv.apply_cx(a, i);
  sv.apply_controlled_ry({i}, {true}, a, theta);
  sv.apply_cx(a, i);
}

void apply_double_gate(Statevector& sv, int b, int a, int j, int i,
                       double theta) {
  sv.apply_cx(b, a);
  sv.apply_cx(j, i);
  sv.apply_cx(b, j);
  sv.apply_controlled_ry({a, j, i}, {false, true, false}, b, theta);
  sv.apply_cx(b, j);
  sv.apply_cx(b, a);
  sv.apply_cx(j, i);
}

void check_distinct(std::initializer_list<int> qs, int n_qubits) {
  std::uint64_t seen = 0;
  for (int q : qs) {
    require(q >= 0 && q < n_qubits, ErrorKind::invalid_argument,
            "excitation qubit index out of range");
    require(!(seen >> q & 1ull), ErrorKind::invalid_argument,
            "overlapping qubit indices within one excitation gate");
    seen |= 1ull << q;
  }
}

}  // namespace

QebParams qeb_params_from_amplitudes(const Amplitudes& amps, int n_orb) {
  const int no = amps.n_occ, nv = amps.n_virt;
  require(no + nv == n_orb, ErrorKind::invalid_argument,
          "amplitude dimensions do not match n_orb");
  QebParams p;
  p.n_orb = n_orb;

  // singles, alpha then beta, lexicographic (i, a)
  for (int spin = 0; spin < 2; ++spin)
    for (int i = 0; i < no; ++i)
      for (int a = 0; a < nv; ++a)
        p.singles.push_back(
            {i + spin * n_orb, no + a + spin * n_orb, 2.0 * amps.t1(i, a)});

  // opposite-spin doubles over all (i, j, a, b)
  for (int i = 0; i < no; ++i)
    for (int j = 0; j < no; ++j)
      for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nv; ++b)
          p.doubles.push_back({i, n_orb + j, no + a, n_orb + no + b,
                               2.0 * amps.t2_os(i, j, a, b)});
  // same-spin doubles, i < j, a < b, alpha then beta
  for (int spin = 0; spin < 2; ++spin)
    for (int i = 0; i < no; ++i)
      for (int j = i + 1; j < no; ++j)
        for (int a = 0; a < nv; ++a)
          for (int b = a + 1; b < nv; ++b)
            p.doubles.push_back({i + spin * n_orb, j + spin * n_orb,
                                 no + a + spin * n_orb, no + b + spin * n_orb,
                                 2.0 * amps.t2_ss(i, j, a, b)});
  return p;
}

Statevector prepare_lcnot_uccsd_state(int n_orb, int n_alpha, int n_beta,
                                      const QebParams& params) {
  require(2 * n_orb <= 20, ErrorKind::invalid_argument,
          "statevector limited to 20 qubits");
  Statevector sv(2 * n_orb);
  const std::uint32_t amask = (1u << n_alpha) - 1u;
  const std::uint32_t bmask = (1u << n_beta) - 1u;
  sv.set_basis_state(determinant_to_basis_index({amask, bmask}, n_orb));

  for (const auto& s : params.singles) {
    check_distinct({s.a, s.i}, sv.n_qubits());
    apply_single_gate(sv, s.a, s.i, s.theta);
  }
  for (const auto& d : params.doubles) {
    check_distinct({d.b, d.a, d.j, d.i}, sv.n_qubits());
    apply_double_gate(sv, d.b, d.a, d.j, d.i, d.theta);
  }
  return sv;
}

CircuitDesc qeb_circuit(int n_orb, int n_alpha, int n_beta,
                        const QebParams& params) {
  CircuitDesc c;
  c.n_qubits = 2 * n_orb;
  for (int p = 0; p < n_alpha; ++p)
    c.gates.push_back({.kind = Gate::Kind::x, .q0 = p});
  for (int p = 0; p < n_beta; ++p)
    c.gates.push_back({.kind = Gate::Kind::x, .q0 = n_orb + p});

  auto cx = [&c](int ctl, int tgt) {
    c.gates.push_back({.kind = Gate::Kind::cx, .q0 = ctl, .q1 = tgt});
  };
  for (const auto& s : params.singles) {
    cx(s.a, s.i);
    Gate g{.kind = Gate::Kind::mcry, .q0 = s.a, .angle = s.theta};
    g.controls = {s.i};
    g.control_pol = {true};
    c.gates.push_back(g);
    cx(s.a, s.i);
  }
  for (const auto& d : params.doubles) {
    cx(d.b, d.a);
    cx(d.j, d.i);
    cx(d.b, d.j);
    Gate g{.kind = Gate::Kind::mcry, .q0 = d.b, .angle = d.theta};
    g.controls = {d.a, d.j, d.i};
    g.control_pol = {false, true, false};
    c.gates.push_back(g);
    cx(d.b, d.j);
    cx(d.b, d.a);
    cx(d.j, d.i);
  }
  return c;
}

Eigen::Matrix4cd qeb_single_gate_matrix(double theta) {
  Eigen::Matrix4cd m;
  for (int col = 0; col < 4; ++col) {
    Statevector sv(2);  // bit 1 = a, bit 0 = i
    sv.set_basis_state(col);
    apply_single_gate(sv, 1, 0, theta);
    for (int row = 0; row < 4; ++row) m(row, col) = sv.amps()[row];
  }
  return m;
}

Eigen::MatrixXcd qeb_double_gate_matrix(double theta) {
  Eigen::MatrixXcd m(16, 16);
  for (int col = 0; col < 16; ++col) {
    Statevector sv(4);  // bits (3, 2, 1, 0) = (b, a, j, i)
    sv.set_basis_state(col);
    apply_double_gate(sv, 3, 2, 1, 0, theta);
    for (int row = 0; row < 16; ++row) m(row, col) = sv.amps()[row];
  }
  return m;
}

}  // namespace sqdw
