#include "core/statevector.hpp"

#include <bit>
#include <cmath>

#include "core/error.hpp"

namespace sqdw {

Statevector::Statevector(int n_qubits) : n_(n_qubits) {
  require(n_qubits >= 1 && n_qubits <= 26, ErrorKind::invalid_argument,
          "qubit count out of range");
  amps_.assign(1ull << n_, cxd(0.0, 0.0));
}

double Statevector::norm() const {
  double acc = 0.0;
  for (const cxd& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void Statevector::set_basis_state(std::uint64_t index) {
  std::fill(amps_.begin(), amps_.end(), cxd(0.0, 0.0));
  amps_[index] = 1.0;
}

void Statevector::apply_x(int q) {
  const std::uint64_t bit = 1ull << q;
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
}

void Statevector::apply_1q(int q, const cxd m[4]) {
  const std::uint64_t bit = 1ull << q;
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    if (!(i & bit)) {
      const cxd a0 = amps_[i], a1 = amps_[i | bit];
      amps_[i] = m[0] * a0 + m[1] * a1;
      amps_[i | bit] = m[2] * a0 + m[3] * a1;
    }
}

void Statevector::apply_cx(int control, int target) {
  const std::uint64_t cbit = 1ull << control, tbit = 1ull << target;
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
}

void Statevector::apply_cz(int a, int b) {
  const std::uint64_t mask = (1ull << a) | (1ull << b);
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    if ((i & mask) == mask) amps_[i] = -amps_[i];
}

void Statevector::apply_phase(int q, cxd phase) {
  const std::uint64_t bit = 1ull << q;
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    if (i & bit) amps_[i] *= phase;
}

void Statevector::apply_controlled_ry(const std::vector<int>& controls,
                                      const std::vector<bool>& positive,
                                      int target, double theta) {
  std::uint64_t cmask = 0, cval = 0;
  for (std::size_t k = 0; k < controls.size(); ++k) {
    cmask |= 1ull << controls[k];
    if (positive[k]) cval |= 1ull << controls[k];
  }
  const std::uint64_t tbit = 1ull << target;
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if ((i & tbit) || (i & cmask) != cval) continue;
    const cxd a0 = amps_[i], a1 = amps_[i | tbit];
    amps_[i] = c * a0 - s * a1;
    amps_[i | tbit] = s * a0 + c * a1;
  }
}

void Statevector::apply_two_mode_block(int q, const Eigen::Matrix2cd& g) {
  const std::uint64_t b0 = 1ull << q, b1 = 1ull << (q + 1);
  const cxd det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    const bool o0 = i & b0, o1 = i & b1;
    if (o0 && o1) {
      amps_[i] *= det;
    } else if (o0 && !o1) {
      const cxd a_low = amps_[i];          // mode q occupied
      const cxd a_high = amps_[(i ^ b0) | b1];
      amps_[i] = g(0, 0) * a_low + g(0, 1) * a_high;
      amps_[(i ^ b0) | b1] = g(1, 0) * a_low + g(1, 1) * a_high;
    }
  }
}

void Statevector::apply_diagonal_phases(const std::vector<double>& phase) {
  require(phase.size() == amps_.size(), ErrorKind::invalid_argument,
          "phase table size mismatch");
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    amps_[i] *= cxd(std::cos(phase[i]), std::sin(phase[i]));
}

std::vector<double> Statevector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

GivensDecomposition givens_decompose(const Eigen::MatrixXcd& u_in) {
  const int n = static_cast<int>(u_in.rows());
  Eigen::MatrixXcd u = u_in;
  GivensDecomposition out;

  // Triangularize with adjacent-row rotations: T = G_k ... G_1 U, so
  // U = G_1^+ ... G_k^+ D and Gamma(U) applies the adjoints in reverse.
  std::vector<GivensDecomposition::Block> elims;
  for (int c = 0; c < n - 1; ++c)
    for (int r = n - 1; r > c; --r) {
      const cxd a = u(r - 1, c), b = u(r, c);
      const double nb = std::abs(b);
      if (nb < 1e-15) continue;
      const double na = std::abs(a);
      const double h = std::hypot(na, nb);
      Eigen::Matrix2cd g;
      g << std::conj(a) / h, std::conj(b) / h, -b / h, a / h;
      u.middleRows(r - 1, 2) = (g * u.middleRows(r - 1, 2)).eval();
      elims.push_back({r - 1, g});
    }
  out.mode_phases.resize(n);
  for (int p = 0; p < n; ++p) out.mode_phases[p] = u(p, p);

  // Gamma(U) = Gamma(G_1^+) ... Gamma(G_k^+) Gamma(D): blocks applied in
  // reverse elimination order with adjoint matrices, after the phases.
  // Application order in code: phases first, then adjoint blocks reversed.
  for (auto it = elims.rbegin(); it != elims.rend(); ++it)
    out.blocks.push_back({it->mode, it->g.adjoint()});
  return out;
}

void apply_orbital_rotation(Statevector& sv, const Eigen::MatrixXcd& u,
                            int mode_offset) {
  GivensDecomposition dec = givens_decompose(u);
  for (int p = 0; p < u.rows(); ++p) {
    if (std::abs(dec.mode_phases[p] - cxd(1.0, 0.0)) > 1e-15)
      sv.apply_phase(mode_offset + p, dec.mode_phases[p]);
  }
  for (const auto& blk : dec.blocks)
    sv.apply_two_mode_block(mode_offset + blk.mode, blk.g);
}

}  // namespace sqdw
