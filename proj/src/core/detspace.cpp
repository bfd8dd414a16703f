#include "core/detspace.hpp"

#include <algorithm>
#include <bit>

#include "core/error.hpp"

namespace sqdw {

DetSpace::DetSpace(int norb, int na, int nb, std::vector<Determinant> dets)
    : n_orb(norb), n_alpha(na), n_beta(nb), dets_(std::move(dets)) {
  std::sort(dets_.begin(), dets_.end());
  dets_.erase(std::unique(dets_.begin(), dets_.end()), dets_.end());
  index_.reserve(dets_.size() * 2);
  for (std::size_t i = 0; i < dets_.size(); ++i) index_[dets_[i].key()] = i;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<std::uint32_t> enumerate_half_strings(int n_orb, int n_elec) {
  require(n_orb >= 0 && n_orb <= 32, ErrorKind::invalid_argument,
          "n_orb must be in [0, 32]");
  require(n_elec >= 0 && n_elec <= n_orb, ErrorKind::invalid_argument,
          "electron count out of range");
  std::vector<std::uint32_t> out;
  out.reserve(binomial(n_orb, n_elec));
  if (n_elec == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack: next integer with the same popcount, ascending.
  std::uint64_t v = (1ull << n_elec) - 1;
  const std::uint64_t limit = (n_orb == 32) ? 0x100000000ull
                                            : (1ull << n_orb);
  while (v < limit) {
    out.push_back(static_cast<std::uint32_t>(v));
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

DetSpace enumerate_symmetry_space(int n_orb, int n_alpha, int n_beta) {
  const auto alphas = enumerate_half_strings(n_orb, n_alpha);
  const auto betas = enumerate_half_strings(n_orb, n_beta);
  return product_space(n_orb, n_alpha, n_beta, alphas, betas);
}

DetSpace product_space(int n_orb, int n_alpha, int n_beta,
                       const std::vector<std::uint32_t>& alpha_strings,
                       const std::vector<std::uint32_t>& beta_strings) {
  std::vector<Determinant> dets;
  dets.reserve(alpha_strings.size() * beta_strings.size());
  for (std::uint32_t a : alpha_strings)
    for (std::uint32_t b : beta_strings) dets.push_back({a, b});
  return DetSpace(n_orb, n_alpha, n_beta, std::move(dets));
}

std::string determinant_to_bitstring(const Determinant& d, int n_orb) {
  std::string s(2 * static_cast<std::size_t>(n_orb), '0');
  for (int p = 0; p < n_orb; ++p) {
    if (d.beta >> p & 1u) s[n_orb - 1 - p] = '1';             // left half
    if (d.alpha >> p & 1u) s[2 * n_orb - 1 - p] = '1';        // right half
  }
  return s;
}

Determinant bitstring_to_determinant(const std::string& s) {
  require(s.size() % 2 == 0 && !s.empty(), ErrorKind::invalid_argument,
          "bitstring length must be even");
  const int n_orb = static_cast<int>(s.size() / 2);
  require(n_orb <= 32, ErrorKind::invalid_argument, "bitstring too long");
  Determinant d;
  for (int p = 0; p < n_orb; ++p) {
    const char cb = s[n_orb - 1 - p];
    const char ca = s[2 * n_orb - 1 - p];
    require((ca == '0' || ca == '1') && (cb == '0' || cb == '1'),
            ErrorKind::parse, "bitstring must contain only 0/1");
    if (cb == '1') d.beta |= 1u << p;
    if (ca == '1') d.alpha |= 1u << p;
  }
  return d;
}

}  // namespace sqdw
