#include "core/sqd.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <unordered_map>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace sqdw {

namespace {

constexpr double kFlipFloor = 1e-3;  // zero-probability deadlock guard

// Repair one spin half toward the target weight with occupancy-guided flips.
std::uint32_t repair_half(std::uint32_t bits, int n_orb, int target,
                          const double* occ, Rng& rng) {
  int weight = std::popcount(bits);
  std::vector<double> w(n_orb);
  while (weight != target) {
    const bool surplus = weight > target;
    for (int p = 0; p < n_orb; ++p) {
      const bool set = bits >> p & 1u;
      if (surplus)
        w[p] = set ? std::max(1.0 - occ[p], kFlipFloor) : 0.0;
      else
        w[p] = set ? 0.0 : std::max(occ[p], kFlipFloor);
    }
    const int pick = static_cast<int>(rng.next_weighted(w));
    bits ^= 1u << pick;
    weight += surplus ? -1 : 1;
  }
  return bits;
}

std::uint64_t space_fingerprint(const DetSpace& space) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& d : space.dets()) {
    std::uint64_t s = d.key() + h;
    h ^= splitmix64(s) + (h << 6) + (h >> 2);
  }
  return h ^ space.size();
}

}  // namespace

BitstringArrays counts_to_arrays(const Counts& counts, int n_orb) {
  require(counts.total > 0, ErrorKind::invalid_argument, "empty counts");
  require(counts.n_qubits == 2 * n_orb, ErrorKind::invalid_argument,
          "counts register does not match 2 n_orb");
  BitstringArrays out;
  out.n_orb = n_orb;
  out.words.reserve(counts.freq.size());
  out.probs.reserve(counts.freq.size());
  for (const auto& [word, freq] : counts.freq) {
    out.words.push_back(word);
    out.probs.push_back(static_cast<double>(freq) / counts.total);
  }
  return out;
}

BitstringArrays recover_configurations(const BitstringArrays& raw,
                                       const Eigen::VectorXd& avg_occupancy,
                                       int n_alpha, int n_beta,
                                       std::uint64_t seed) {
  const int n = raw.n_orb;
  require(avg_occupancy.size() == 2 * n, ErrorKind::invalid_argument,
          "occupancy vector must have 2 n_orb entries");
  for (int k = 0; k < avg_occupancy.size(); ++k)
    require(avg_occupancy(k) > -1e-12 && avg_occupancy(k) < 1.0 + 1e-12,
            ErrorKind::invalid_argument, "occupancies must lie in [0, 1]");

  Rng rng(seed);
  BitstringArrays out;
  out.n_orb = n;
  out.words.reserve(raw.words.size());
  out.probs = raw.probs;

  std::vector<double> occ_a(n), occ_b(n);
  for (int p = 0; p < n; ++p) {
    occ_a[p] = std::clamp(avg_occupancy(p), 0.0, 1.0);
    occ_b[p] = std::clamp(avg_occupancy(n + p), 0.0, 1.0);
  }

  for (std::uint64_t word : raw.words) {
    Determinant d = basis_index_to_determinant(word, n);
    if (std::popcount(d.alpha) != n_alpha)
      d.alpha = repair_half(d.alpha, n, n_alpha, occ_a.data(), rng);
    if (std::popcount(d.beta) != n_beta)
      d.beta = repair_half(d.beta, n, n_beta, occ_b.data(), rng);
    out.words.push_back(determinant_to_basis_index(d, n));
  }
  // renormalize over the output multiset
  double total = 0.0;
  for (double p : out.probs) total += p;
  if (total > 0)
    for (double& p : out.probs) p /= total;
  return out;
}

std::vector<DetSpace> postselect_and_subsample(const BitstringArrays& rows,
                                               int n_alpha, int n_beta,
                                               double eps_s, int n_batches,
                                               std::uint64_t seed,
                                               long* unique_compliant) {
  const int n = rows.n_orb;
  require(eps_s >= 1.0, ErrorKind::invalid_argument, "eps_s must be >= 1");
  require(n_batches >= 1, ErrorKind::invalid_argument, "need >= 1 batch");

  // dedupe compliant rows, accumulating weight
  std::map<std::uint64_t, double> pool;
  for (std::size_t k = 0; k < rows.words.size(); ++k) {
    const Determinant d = basis_index_to_determinant(rows.words[k], n);
    if (std::popcount(d.alpha) == n_alpha && std::popcount(d.beta) == n_beta)
      pool[rows.words[k]] += rows.probs[k];
  }
  if (unique_compliant) *unique_compliant = static_cast<long>(pool.size());
  require(!pool.empty(), ErrorKind::empty_sector,
          "no sampled configuration lies in the target symmetry sector");

  std::vector<std::uint64_t> words;
  std::vector<double> weights;
  for (const auto& [w, p] : pool) {
    words.push_back(w);
    weights.push_back(p);
  }

  Rng rng(seed);
  std::vector<DetSpace> batches;
  for (int b = 0; b < n_batches; ++b) {
    std::vector<std::uint64_t> chosen;
    if (static_cast<double>(words.size()) > eps_s) {
      // weighted draw without replacement
      std::vector<double> w = weights;
      const std::size_t take = static_cast<std::size_t>(eps_s);
      for (std::size_t t = 0; t < take; ++t) {
        const std::size_t pick = rng.next_weighted(w);
        chosen.push_back(words[pick]);
        w[pick] = 0.0;
      }
    } else {
      chosen = words;
    }

    // proliferation: pooled half-strings tensored with themselves
    std::vector<std::uint32_t> alphas, betas;
    for (std::uint64_t word : chosen) {
      const Determinant d = basis_index_to_determinant(word, n);
      alphas.push_back(d.alpha);
      betas.push_back(d.beta);
    }
    if (n_alpha == n_beta) {
      std::vector<std::uint32_t> u = alphas;
      u.insert(u.end(), betas.begin(), betas.end());
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
      batches.push_back(product_space(n, n_alpha, n_beta, u, u));
    } else {
      std::sort(alphas.begin(), alphas.end());
      alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
      std::sort(betas.begin(), betas.end());
      betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
      batches.push_back(product_space(n, n_alpha, n_beta, alphas, betas));
    }
  }
  return batches;
}

SpectralResult solve_fermion(const DetSpace& batch, const MOIntegrals& mo,
                             int davidson_max_cycles) {
  DavidsonOptions opt;
  opt.max_cycles = davidson_max_cycles;
  return solve_subspace(batch, mo, opt, false);
}

SpaceRatios space_metrics(const SQDDims& dims) {
  require(dims.s_sym > 0, ErrorKind::invalid_argument, "empty symmetry space");
  SpaceRatios r;
  r.eta_sym = static_cast<double>(dims.s_sym) / dims.hilbert;
  r.eta_postcr = static_cast<double>(dims.s_postcr) / dims.s_sym;
  r.eta_sub = static_cast<double>(dims.s_sub) / dims.s_sym;
  return r;
}

SQDResult run_sqd(const Counts& counts, const MOIntegrals& mo, int n_alpha,
                  int n_beta, const SQDConfig& cfg) {
  require(cfg.max_iterations >= 1, ErrorKind::invalid_argument,
          "need at least one iteration");
  const int n = mo.n_orb;
  BitstringArrays raw = counts_to_arrays(counts, n);

  SQDResult res;
  res.dims.s_samp = static_cast<long>(raw.words.size());
  res.dims.s_sym = static_cast<long>(binomial(n, n_alpha) * binomial(n, n_beta));
  res.dims.hilbert = std::pow(2.0, 2 * n);

  const double eps_s = cfg.eps_sqrt_rule
                           ? std::round(std::sqrt(static_cast<double>(res.dims.s_sym)))
                           : cfg.samples_per_batch;

  double best_e = 0.0;
  bool have_best = false;
  Eigen::VectorXd occ_avg;  // running mean over the previous iteration
  std::unordered_map<std::uint64_t, std::pair<SpectralResult, double>> cache;

  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    BitstringArrays refined =
        (iter == 0) ? raw
                    : recover_configurations(raw, occ_avg, n_alpha, n_beta,
                                             hash_seed(cfg.seed, 0xC0DE, iter));
    long postcr = 0;
    std::vector<DetSpace> batches = postselect_and_subsample(
        refined, n_alpha, n_beta, eps_s, cfg.n_batches,
        hash_seed(cfg.seed, 0x5AB5, iter), &postcr);

    Eigen::VectorXd occ_sum = Eigen::VectorXd::Zero(2 * n);
    double iter_min = 0.0;
    bool iter_first = true;
    for (std::size_t b = 0; b < batches.size(); ++b) {
      const std::uint64_t key = space_fingerprint(batches[b]);
      auto it = cache.find(key);
      if (it == cache.end()) {
        SpectralResult sol =
            solve_fermion(batches[b], mo, cfg.davidson_max_cycles);
        it = cache.emplace(key, std::make_pair(std::move(sol), 0.0)).first;
      }
      const SpectralResult& sol = it->second.first;
      const double e_total = sol.e0 + mo.e_core;
      occ_sum += sol.avg_occupancy;
      if (iter_first || e_total < iter_min) {
        iter_min = e_total;
        iter_first = false;
      }
      if (!have_best || e_total < best_e) {
        best_e = e_total;
        have_best = true;
        res.best = sol;
        res.best_space = batches[b];
      }
      if (iter == cfg.max_iterations - 1 && b == batches.size() - 1) {
        res.dims.s_postcr = postcr;
        res.dims.s_sub = static_cast<long>(batches[b].size());
        res.final_occupancy = occ_sum / static_cast<double>(batches.size());
        res.s2 = sol.s2;
      }
    }
    res.energy_history.push_back(iter_min);
    occ_avg = occ_sum / static_cast<double>(batches.size());
    res.iterations_run = iter + 1;
  }

  res.e_sqd = best_e;
  const SpaceRatios ratios = space_metrics(res.dims);
  res.eta_sym = ratios.eta_sym;
  res.eta_postcr = ratios.eta_postcr;
  res.eta_sub = ratios.eta_sub;
  return res;
}

}  // namespace sqdw
