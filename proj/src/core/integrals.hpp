#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

#include "core/basis.hpp"
#include "core/molecule.hpp"

namespace sqdw {

// Two-electron integrals (mu nu | lambda sigma) in chemist notation, packed
// over the 8 permutational symmetries of real orbitals.
class PackedEri {
 public:
  PackedEri() = default;
  explicit PackedEri(int n_ao)
      : n_(n_ao), data_(tri(pair_count(n_ao)), 0.0) {}

  int n() const { return n_; }
  std::size_t size() const { return data_.size(); }

  static std::size_t pair_count(int n) {
    return static_cast<std::size_t>(n) * (n + 1) / 2;
  }
  static std::size_t tri(std::size_t p) { return p * (p + 1) / 2; }
  static std::size_t pair_index(int i, int j) {  // requires i >= j
    return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
  }
  static std::size_t canonical_index(int i, int j, int k, int l) {
    if (i < j) std::swap(i, j);
    if (k < l) std::swap(k, l);
    std::size_t p = pair_index(i, j), q = pair_index(k, l);
    if (p < q) std::swap(p, q);
    return p * (p + 1) / 2 + q;
  }

  double get(int i, int j, int k, int l) const {
    return data_[canonical_index(i, j, k, l)];
  }
  double& at(int i, int j, int k, int l) {
    return data_[canonical_index(i, j, k, l)];
  }
  const std::vector<double>& raw() const { return data_; }
  std::vector<double>& raw() { return data_; }

 private:
  int n_ = 0;
  std::vector<double> data_;
};

struct AOBundle {
  int n_ao = 0;
  Eigen::MatrixXd S;
  Eigen::MatrixXd hcore;
  PackedEri eri;
  double e_nuc = 0.0;
  std::vector<int> ao_atom_map;
  std::string basis_name;
};

AOBundle compute_ao_integrals(const Molecule& mol, const std::string& basis_name);
AOBundle compute_ao_integrals(const Molecule& mol, const BasisSet& basis);

// Coulomb / exchange matrices contracted with a symmetric (spin-summed)
// density: J_mn = sum_ls (mn|ls) D_ls, K_mn = sum_ls (ml|ns) D_ls.
void coulomb_exchange(const PackedEri& eri, const Eigen::MatrixXd& density,
                      Eigen::MatrixXd& coulomb, Eigen::MatrixXd& exchange);

}  // namespace sqdw
