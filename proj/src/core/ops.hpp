#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "core/detspace.hpp"

namespace sqdw {

// Second-quantized operator primitives on determinants. Spin-orbital modes
// are ordered [alpha 0..n-1, beta 0..n-1]; a determinant is the ascending
// product of creation operators over its occupied modes applied to vacuum.

// Combined occupation mask of a determinant.
inline std::uint64_t occ_mask(const Determinant& d, int n_orb) {
  return static_cast<std::uint64_t>(d.alpha) |
         (static_cast<std::uint64_t>(d.beta) << n_orb);
}
inline Determinant from_occ_mask(std::uint64_t m, int n_orb) {
  return basis_index_to_determinant(m, n_orb);
}

// Applies a single creation (create=true) or annihilation operator for mode
// m; returns the sign and updates the mask, or nullopt if it vanishes.
std::optional<int> apply_mode_op(std::uint64_t& mask, int m, bool create);

// a^+_c a_a acting on a determinant; nullopt if it vanishes.
struct SignedDet {
  Determinant det;
  int sign;
};
std::optional<SignedDet> apply_crea_anni(const Determinant& d, int n_orb,
                                         int mode_create, int mode_annihilate);

// Spin-summed excitation E_pq = sum_sigma a^+_{p sigma} a_{q sigma} applied
// to a vector over `space`; returns E_pq x.
std::vector<double> apply_e_pq(const DetSpace& space, int p, int q,
                               const std::vector<double>& x);

// One-term-per-amplitude excitation operator T = T1 + T2 in the restricted
// convention of `Amplitudes`; the connection structure is precomputed so the
// operator can be re-applied cheaply as amplitudes change.
class ExcitationOp {
 public:
  // Builds the structure for a space whose orbitals are partitioned into
  // [0, n_occ) occupied and [n_occ, n_orb) virtual.
  ExcitationOp(const DetSpace& space, int n_occ);

  int n_occ() const { return n_occ_; }
  int n_virt() const { return n_virt_; }
  std::size_t n_t1() const {
    return static_cast<std::size_t>(n_occ_) * n_virt_;
  }
  std::size_t n_t2() const {
    return static_cast<std::size_t>(n_occ_) * n_occ_ * n_virt_ * n_virt_;
  }

  // y += T x (transpose=false) or y += T^dagger x (transpose=true), with T
  // built from the flat amplitude vector [t1, t2_os].
  void apply(const std::vector<double>& amps, const std::vector<double>& x,
             std::vector<double>& y, bool transpose) const;

  // exp(+/- T) x via the exact terminating series.
  std::vector<double> apply_exp(const std::vector<double>& amps,
                                const std::vector<double>& x, double scale,
                                bool transpose) const;

 private:
  struct Trip {
    std::uint32_t row;
    std::uint32_t col;
    std::uint32_t amp;
    float sign;
  };
  std::vector<Trip> trips_;
  int n_occ_ = 0;
  int n_virt_ = 0;
  std::size_t dim_ = 0;
};

// S+ applied to a vector over `space`; the result lives in the
// (n_alpha + 1, n_beta - 1) sector and is returned as a det -> amplitude map.
std::unordered_map<std::uint64_t, double> apply_s_plus(
    const DetSpace& space, const std::vector<double>& x);

}  // namespace sqdw
