#include "core/ccsd.hpp"

#include <bit>
#include <cmath>
#include <deque>
#include <sstream>

#include "core/detspace.hpp"
#include "core/error.hpp"
#include "core/ops.hpp"
#include "core/slater_condon.hpp"

namespace sqdw {

namespace {

struct VecDiis {
  std::deque<std::vector<double>> xs, errs;
  int depth;
  explicit VecDiis(int d) : depth(d) {}

  std::vector<double> extrapolate(const std::vector<double>& x,
                                  const std::vector<double>& err) {
    xs.push_back(x);
    errs.push_back(err);
    if (static_cast<int>(xs.size()) > depth) {
      xs.pop_front();
      errs.pop_front();
    }
    const int k = static_cast<int>(xs.size());
    if (k < 2) return x;
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(k + 1, k + 1);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        double dot = 0.0;
        for (std::size_t m = 0; m < err.size(); ++m)
          dot += errs[i][m] * errs[j][m];
        b(i, j) = dot;
      }
      b(i, k) = b(k, i) = -1.0;
    }
    rhs(k) = -1.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(b);
    if (!lu.isInvertible()) return x;
    Eigen::VectorXd c = lu.solve(rhs);
    std::vector<double> out(x.size(), 0.0);
    for (int i = 0; i < k; ++i)
      for (std::size_t m = 0; m < x.size(); ++m) out[m] += c(i) * xs[i][m];
    return out;
  }
};

// Shared context: sector space, projection determinants with their operator
// signs, Hamiltonian, denominators.
struct CcContext {
  DetSpace space;
  SparseSym h;
  ExcitationOp top;
  std::size_t hf_index = 0;
  // per amplitude: determinant index and the sign of tau_mu |Phi0>
  std::vector<std::size_t> amp_det;
  std::vector<double> amp_sign;
  std::vector<double> denom;
  int n_occ, n_virt, n_orb;

  CcContext(const MOIntegrals& mo, const Eigen::VectorXd& eps, int no)
      : space(enumerate_symmetry_space(mo.n_orb, no, no)),
        h(build_subspace_hamiltonian(space, mo)),
        top(space, no),
        n_occ(no),
        n_virt(mo.n_orb - no),
        n_orb(mo.n_orb) {
    require(space.size() <= 200000, ErrorKind::invalid_argument,
            "CCSD determinant workspace too large");
    const std::uint32_t occ = (no == 32) ? 0xffffffffu : ((1u << no) - 1u);
    const long hf = space.index_of({occ, occ});
    require(hf >= 0, ErrorKind::internal, "HF determinant missing from space");
    hf_index = static_cast<std::size_t>(hf);
    const Determinant hf_det = space[hf_index];

    const std::size_t n_amp = top.n_t1() + top.n_t2();
    amp_det.resize(n_amp);
    amp_sign.resize(n_amp);
    denom.resize(n_amp);

    for (int i = 0; i < no; ++i)
      for (int a = 0; a < n_virt; ++a) {
        // singles projected on the alpha excitation
        auto r = apply_crea_anni(hf_det, n_orb, no + a, i);
        const std::size_t mu = static_cast<std::size_t>(i) * n_virt + a;
        amp_det[mu] = static_cast<std::size_t>(space.index_of(r->det));
        amp_sign[mu] = r->sign;
        denom[mu] = eps(i) - eps(no + a);
      }
    for (int i = 0; i < no; ++i)
      for (int j = 0; j < no; ++j)
        for (int a = 0; a < n_virt; ++a)
          for (int b = 0; b < n_virt; ++b) {
            auto ra = apply_crea_anni(hf_det, n_orb, no + a, i);
            auto rb = apply_crea_anni(ra->det, n_orb, n_orb + no + b, n_orb + j);
            const std::size_t mu =
                top.n_t1() +
                ((static_cast<std::size_t>(i) * no + j) * n_virt + a) * n_virt +
                b;
            amp_det[mu] = static_cast<std::size_t>(space.index_of(rb->det));
            amp_sign[mu] = ra->sign * rb->sign;
            denom[mu] = eps(i) + eps(j) - eps(no + a) - eps(no + b);
          }
  }

  std::vector<double> hbar_on_hf(const std::vector<double>& amps) const {
    std::vector<double> unit(space.size(), 0.0);
    unit[hf_index] = 1.0;
    std::vector<double> ket = top.apply_exp(amps, unit, 1.0, false);
    std::vector<double> w(space.size());
    h.matvec(ket.data(), w.data());
    return top.apply_exp(amps, w, -1.0, false);
  }

  // residual over the amplitude basis plus the worst projection over every
  // rank <= 2 determinant (same-spin doubles included)
  void project(const std::vector<double>& hbar, std::vector<double>& resid,
               double* max_all) const {
    resid.resize(amp_det.size());
    for (std::size_t mu = 0; mu < amp_det.size(); ++mu)
      resid[mu] = amp_sign[mu] * hbar[amp_det[mu]];
    if (!max_all) return;
    const Determinant hf_det = space[hf_index];
    double worst = 0.0;
    for (std::size_t k = 0; k < space.size(); ++k) {
      if (k == hf_index) continue;
      const int da = std::popcount(space[k].alpha ^ hf_det.alpha) / 2;
      const int db = std::popcount(space[k].beta ^ hf_det.beta) / 2;
      if (da + db <= 2) worst = std::max(worst, std::abs(hbar[k]));
    }
    *max_all = worst;
  }
};

std::vector<double> pack_amplitudes(const Amplitudes& a) {
  std::vector<double> v(static_cast<std::size_t>(a.n_occ) * a.n_virt +
                        a.t2.size());
  for (int i = 0; i < a.n_occ; ++i)
    for (int x = 0; x < a.n_virt; ++x)
      v[static_cast<std::size_t>(i) * a.n_virt + x] = a.t1(i, x);
  std::copy(a.t2.begin(), a.t2.end(),
            v.begin() + static_cast<std::size_t>(a.n_occ) * a.n_virt);
  return v;
}

Amplitudes unpack_amplitudes(const std::vector<double>& v, int no, int nv,
                             Amplitudes::Source source) {
  Amplitudes a;
  a.n_occ = no;
  a.n_virt = nv;
  a.source = source;
  a.t1 = Eigen::MatrixXd::Zero(no, nv);
  for (int i = 0; i < no; ++i)
    for (int x = 0; x < nv; ++x) a.t1(i, x) = v[static_cast<std::size_t>(i) * nv + x];
  a.t2.assign(v.begin() + static_cast<std::size_t>(no) * nv, v.end());
  return a;
}

}  // namespace

CcsdResult ccsd_solve(const MOIntegrals& mo, const Eigen::VectorXd& eps,
                      int n_occ, const CcsdOptions& opt) {
  require(n_occ > 0 && n_occ <= mo.n_orb, ErrorKind::invalid_argument,
          "bad occupied count for CCSD");
  const int n_virt = mo.n_orb - n_occ;

  CcsdResult res;
  if (n_virt == 0) {
    // no excitations possible: CCSD reduces to the reference energy
    DetSpace space = enumerate_symmetry_space(mo.n_orb, n_occ, n_occ);
    SparseSym h = build_subspace_hamiltonian(space, mo);
    res.amplitudes.n_occ = n_occ;
    res.amplitudes.n_virt = 0;
    res.amplitudes.t1 = Eigen::MatrixXd::Zero(n_occ, 0);
    res.amplitudes.source = Amplitudes::Source::ccsd;
    res.e_total = h.diagonal[0] + mo.e_core;
    return res;
  }

  CcContext ctx(mo, eps, n_occ);

  Mp2Result mp2 = mp2_amplitudes(mo, eps, n_occ);
  std::vector<double> t = pack_amplitudes(mp2.amplitudes);

  const double e_hf = ctx.h.diagonal[ctx.hf_index];
  VecDiis diis(opt.diis_depth);
  double e_prev = e_hf;
  int grow_streak = 0;
  double prev_de = 0.0;

  for (int iter = 1; iter <= opt.max_iter; ++iter) {
    std::vector<double> hbar = ctx.hbar_on_hf(t);
    const double e_elec = hbar[ctx.hf_index];

    std::vector<double> resid;
    double max_all = 0.0;
    ctx.project(hbar, resid, &max_all);
    double rmax = 0.0;
    for (double r : resid) rmax = std::max(rmax, std::abs(r));

    if (std::max(rmax, max_all) < opt.amp_tol) {
      res.amplitudes = unpack_amplitudes(t, n_occ, n_virt,
                                         Amplitudes::Source::ccsd);
      res.e_total = e_elec + mo.e_core;
      res.e_corr = e_elec - e_hf;
      res.n_iterations = iter;
      res.max_residual = std::max(rmax, max_all);
      return res;
    }

    const double de = std::abs(e_elec - e_prev);
    if (iter > 2 && de > prev_de && de > 1e-2)
      ++grow_streak;
    else
      grow_streak = 0;
    require(grow_streak < 5, ErrorKind::not_converged,
            "CCSD diverging: energy change grew five consecutive iterations");
    double tmax = 0.0;
    for (double v : t) tmax = std::max(tmax, std::abs(v));
    require(tmax < 100.0, ErrorKind::not_converged,
            "CCSD diverging: amplitude norm exploded");
    prev_de = de;
    e_prev = e_elec;

    for (std::size_t mu = 0; mu < t.size(); ++mu) {
      const double d = ctx.denom[mu];
      require(std::abs(d) > 1e-10, ErrorKind::invalid_argument,
              "vanishing CCSD denominator");
      t[mu] += resid[mu] / d;
    }
    t = diis.extrapolate(t, resid);
  }
  std::ostringstream msg;
  msg << "CCSD not converged after " << opt.max_iter << " iterations (energy "
      << e_prev + mo.e_core << ")";
  fail(ErrorKind::not_converged, msg.str());
}

RdmSet ccsd_rdms(const MOIntegrals& mo, const Eigen::VectorXd& eps, int n_occ,
                 const Amplitudes& amps, const CcsdOptions& opt) {
  const int n = mo.n_orb;
  CcContext ctx(mo, eps, n_occ);
  std::vector<double> t = pack_amplitudes(amps);

  std::vector<double> hbar = ctx.hbar_on_hf(t);
  const double e_elec = hbar[ctx.hf_index];

  // lambda equations: project (Hbar - E) against <Phi0|(1 + Lambda)
  std::vector<double> lam = t;  // standard initial guess
  VecDiis diis(opt.diis_depth);
  bool converged = false;
  for (int iter = 1; iter <= opt.max_iter; ++iter) {
    std::vector<double> u(ctx.space.size(), 0.0);
    u[ctx.hf_index] = 1.0;
    for (std::size_t mu = 0; mu < lam.size(); ++mu)
      u[ctx.amp_det[mu]] += ctx.amp_sign[mu] * lam[mu];

    std::vector<double> w = ctx.top.apply_exp(t, u, -1.0, true);
    std::vector<double> hw(ctx.space.size());
    ctx.h.matvec(w.data(), hw.data());
    std::vector<double> w3 = ctx.top.apply_exp(t, hw, 1.0, true);

    std::vector<double> resid(lam.size());
    double rmax = 0.0;
    for (std::size_t mu = 0; mu < lam.size(); ++mu) {
      resid[mu] =
          ctx.amp_sign[mu] * (w3[ctx.amp_det[mu]] - e_elec * u[ctx.amp_det[mu]]);
      rmax = std::max(rmax, std::abs(resid[mu]));
    }
    if (rmax < opt.amp_tol) {
      converged = true;
      break;
    }
    for (std::size_t mu = 0; mu < lam.size(); ++mu)
      lam[mu] += resid[mu] / ctx.denom[mu];
    lam = diis.extrapolate(lam, resid);
  }
  require(converged, ErrorKind::not_converged, "CCSD lambda not converged");

  // response densities: <Phi0|(1+Lambda) e^{-T} ... e^{T}|Phi0>
  std::vector<double> u(ctx.space.size(), 0.0);
  u[ctx.hf_index] = 1.0;
  for (std::size_t mu = 0; mu < lam.size(); ++mu)
    u[ctx.amp_det[mu]] += ctx.amp_sign[mu] * lam[mu];
  std::vector<double> bra = ctx.top.apply_exp(t, u, -1.0, true);
  std::vector<double> unit(ctx.space.size(), 0.0);
  unit[ctx.hf_index] = 1.0;
  std::vector<double> ket = ctx.top.apply_exp(t, unit, 1.0, false);

  RdmSet raw = compute_rdms(ctx.space, bra, ket, true);

  RdmSet out;
  out.rdm1 = 0.5 * (raw.rdm1 + raw.rdm1.transpose());
  out.occupancies = Eigen::VectorXd(2 * n);
  for (int p = 0; p < n; ++p) {
    out.occupancies(p) = 0.5 * out.rdm1(p, p);
    out.occupancies(n + p) = 0.5 * out.rdm1(p, p);
  }
  out.rdm2.assign(raw.rdm2.size(), 0.0);
  auto idx = [n](int p, int q, int r, int s) {
    return ((static_cast<std::size_t>(p) * n + q) * n + r) * n + s;
  };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          out.rdm2[idx(p, q, r, s)] =
              0.25 * (raw.rdm2[idx(p, q, r, s)] + raw.rdm2[idx(q, p, s, r)] +
                      raw.rdm2[idx(r, s, p, q)] + raw.rdm2[idx(s, r, q, p)]);
  out.s2 = 0.0;
  return out;
}

}  // namespace sqdw
