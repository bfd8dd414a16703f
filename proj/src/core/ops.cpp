#include "core/ops.hpp"

#include <bit>

#include "core/error.hpp"

namespace sqdw {

namespace {

inline int parity_below(std::uint64_t mask, int m) {
  const std::uint64_t below = mask & ((1ull << m) - 1);
  return (std::popcount(below) & 1) ? -1 : 1;
}

}  // namespace

std::optional<int> apply_mode_op(std::uint64_t& mask, int m, bool create) {
  const std::uint64_t bit = 1ull << m;
  if (create == bool(mask & bit)) return std::nullopt;
  const int sign = parity_below(mask, m);
  mask ^= bit;
  return sign;
}

std::optional<SignedDet> apply_crea_anni(const Determinant& d, int n_orb,
                                         int mode_create,
                                         int mode_annihilate) {
  std::uint64_t mask = occ_mask(d, n_orb);
  auto s1 = apply_mode_op(mask, mode_annihilate, false);
  if (!s1) return std::nullopt;
  auto s2 = apply_mode_op(mask, mode_create, true);
  if (!s2) return std::nullopt;
  return SignedDet{from_occ_mask(mask, n_orb), *s1 * *s2};
}

std::vector<double> apply_e_pq(const DetSpace& space, int p, int q,
                               const std::vector<double>& x) {
  const int n = space.n_orb;
  std::vector<double> y(space.size(), 0.0);
  for (std::size_t k = 0; k < space.size(); ++k) {
    const double c = x[k];
    if (c == 0.0) continue;
    const Determinant& d = space[k];
    for (int spin = 0; spin < 2; ++spin) {
      const int off = spin * n;
      auto r = apply_crea_anni(d, n, p + off, q + off);
      if (!r) continue;
      const long idx = space.index_of(r->det);
      if (idx >= 0) y[static_cast<std::size_t>(idx)] += r->sign * c;
    }
  }
  return y;
}

ExcitationOp::ExcitationOp(const DetSpace& space, int n_occ)
    : n_occ_(n_occ), n_virt_(space.n_orb - n_occ), dim_(space.size()) {
  const int n = space.n_orb;
  const int nv = n_virt_;
  require(n_occ >= 0 && nv >= 0, ErrorKind::invalid_argument,
          "bad orbital partition");

  auto t1_idx = [&](int i, int a) {
    return static_cast<std::uint32_t>(i * nv + a);
  };
  auto t2_idx = [&](int i, int j, int a, int b) {
    return static_cast<std::uint32_t>(
        n_t1() + ((static_cast<std::size_t>(i) * n_occ_ + j) * nv + a) * nv + b);
  };

  for (std::size_t k = 0; k < space.size(); ++k) {
    const Determinant& d = space[k];

    // singles, both spins, shared spatial amplitude
    for (int spin = 0; spin < 2; ++spin) {
      const int off = spin * n;
      for (int i = 0; i < n_occ_; ++i)
        for (int a = 0; a < nv; ++a) {
          auto r = apply_crea_anni(d, n, n_occ_ + a + off, i + off);
          if (!r) continue;
          const long row = space.index_of(r->det);
          if (row < 0) continue;
          trips_.push_back({static_cast<std::uint32_t>(row),
                            static_cast<std::uint32_t>(k), t1_idx(i, a),
                            static_cast<float>(r->sign)});
        }
    }

    // opposite-spin doubles: i alpha -> a alpha, j beta -> b beta
    for (int i = 0; i < n_occ_; ++i)
      for (int a = 0; a < nv; ++a) {
        auto ra = apply_crea_anni(d, n, n_occ_ + a, i);
        if (!ra) continue;
        for (int j = 0; j < n_occ_; ++j)
          for (int b = 0; b < nv; ++b) {
            auto rb = apply_crea_anni(ra->det, n, n + n_occ_ + b, n + j);
            if (!rb) continue;
            const long row = space.index_of(rb->det);
            if (row < 0) continue;
            trips_.push_back({static_cast<std::uint32_t>(row),
                              static_cast<std::uint32_t>(k), t2_idx(i, j, a, b),
                              static_cast<float>(ra->sign * rb->sign)});
          }
      }

    // same-spin doubles with derived amplitude t2(ijab) - t2(ijba)
    for (int spin = 0; spin < 2; ++spin) {
      const int off = spin * n;
      for (int i = 0; i < n_occ_; ++i)
        for (int j = i + 1; j < n_occ_; ++j)
          for (int a = 0; a < nv; ++a)
            for (int b = a + 1; b < nv; ++b) {
              // a^+_a a^+_b a_j a_i applied right to left
              std::uint64_t mask = occ_mask(d, n);
              int sign = 1;
              bool alive = true;
              for (auto [mode, create] :
                   {std::pair{i + off, false}, {j + off, false},
                    {n_occ_ + b + off, true}, {n_occ_ + a + off, true}}) {
                auto s = apply_mode_op(mask, mode, create);
                if (!s) {
                  alive = false;
                  break;
                }
                sign *= *s;
              }
              if (!alive) continue;
              const long row = space.index_of(from_occ_mask(mask, n));
              if (row < 0) continue;
              trips_.push_back({static_cast<std::uint32_t>(row),
                                static_cast<std::uint32_t>(k),
                                t2_idx(i, j, a, b), static_cast<float>(sign)});
              trips_.push_back({static_cast<std::uint32_t>(row),
                                static_cast<std::uint32_t>(k),
                                t2_idx(i, j, b, a), static_cast<float>(-sign)});
            }
    }
  }
}

void ExcitationOp::apply(const std::vector<double>& amps,
                         const std::vector<double>& x, std::vector<double>& y,
                         bool transpose) const {
  for (const Trip& t : trips_) {
    const double v = amps[t.amp] * t.sign;
    if (transpose)
      y[t.col] += v * x[t.row];
    else
      y[t.row] += v * x[t.col];
  }
}

std::vector<double> ExcitationOp::apply_exp(const std::vector<double>& amps,
                                            const std::vector<double>& x,
                                            double scale, bool transpose) const {
  std::vector<double> acc = x;
  std::vector<double> term = x;
  std::vector<double> next(dim_);
  // T raises (or lowers, transposed) the excitation rank every application,
  // so the series terminates; cap generously and stop on an empty term.
  for (int k = 1; k <= 2 * (n_occ_ + 1); ++k) {
    std::fill(next.begin(), next.end(), 0.0);
    apply(amps, term, next, transpose);
    const double factor = scale / k;
    bool any = false;
    for (std::size_t i = 0; i < dim_; ++i) {
      term[i] = next[i] * factor;
      if (term[i] != 0.0) any = true;
      acc[i] += term[i];
    }
    if (!any) break;
  }
  return acc;
}

std::unordered_map<std::uint64_t, double> apply_s_plus(
    const DetSpace& space, const std::vector<double>& x) {
  const int n = space.n_orb;
  std::unordered_map<std::uint64_t, double> out;
  for (std::size_t k = 0; k < space.size(); ++k) {
    const double c = x[k];
    if (c == 0.0) continue;
    for (int p = 0; p < n; ++p) {
      auto r = apply_crea_anni(space[k], n, p, n + p);  // beta p -> alpha p
      if (!r) continue;
      out[r->det.key()] += r->sign * c;
    }
  }
  return out;
}

}  // namespace sqdw
