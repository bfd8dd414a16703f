#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace sqdw {

// Slater determinant over spatial orbitals, bit p = orbital p occupation.
// n_orb <= 32.
struct Determinant {
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;

  std::uint64_t key() const {
    return static_cast<std::uint64_t>(alpha) |
           (static_cast<std::uint64_t>(beta) << 32);
  }
  friend bool operator==(const Determinant& a, const Determinant& b) {
    return a.alpha == b.alpha && a.beta == b.beta;
  }
  friend bool operator<(const Determinant& a, const Determinant& b) {
    return a.key() < b.key();
  }
};

// Deterministically ordered determinant set with O(1) membership lookup.
// Ordering is lexicographic by (alpha_bits, beta_bits) ascending.
class DetSpace {
 public:
  DetSpace() = default;
  DetSpace(int n_orb, int n_alpha, int n_beta, std::vector<Determinant> dets);

  int n_orb = 0;
  int n_alpha = 0;
  int n_beta = 0;

  const std::vector<Determinant>& dets() const { return dets_; }
  std::size_t size() const { return dets_.size(); }
  const Determinant& operator[](std::size_t i) const { return dets_[i]; }

  // -1 when absent
  long index_of(const Determinant& d) const {
    auto it = index_.find(d.key());
    return it == index_.end() ? -1 : static_cast<long>(it->second);
  }

 private:
  std::vector<Determinant> dets_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

// All determinants of the (n_alpha, n_beta) symmetry sector;
// |result| = C(n_orb, n_alpha) * C(n_orb, n_beta).
DetSpace enumerate_symmetry_space(int n_orb, int n_alpha, int n_beta);

// All n_orb-bit masks of the given popcount, ascending.
std::vector<std::uint32_t> enumerate_half_strings(int n_orb, int n_elec);

// Tensor square of a pooled half-string set (proliferation).
DetSpace product_space(int n_orb, int n_alpha, int n_beta,
                       const std::vector<std::uint32_t>& alpha_strings,
                       const std::vector<std::uint32_t>& beta_strings);

std::uint64_t binomial(int n, int k);

// ---- measurement-string conventions ------------------------------------
// A length-2n measurement string has its right half as the alpha occupations
// and its left half as the beta occupations; within each half the leftmost
// character is the highest orbital index. These two functions own the
// convention for the whole project.
std::string determinant_to_bitstring(const Determinant& d, int n_orb);
Determinant bitstring_to_determinant(const std::string& s);

// Basis-state index for the statevector simulator: qubit q < n_orb carries
// alpha orbital q, qubit n_orb + p carries beta orbital p.
inline std::uint64_t determinant_to_basis_index(const Determinant& d, int n_orb) {
  return static_cast<std::uint64_t>(d.alpha) |
         (static_cast<std::uint64_t>(d.beta) << n_orb);
}
inline Determinant basis_index_to_determinant(std::uint64_t idx, int n_orb) {
  const std::uint32_t mask = (n_orb == 32) ? 0xffffffffu
                                           : ((1u << n_orb) - 1u);
  return Determinant{static_cast<std::uint32_t>(idx) & mask,
                     static_cast<std::uint32_t>(idx >> n_orb) & mask};
}

}  // namespace sqdw
