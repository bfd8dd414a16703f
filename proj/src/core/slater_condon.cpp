#include "core/slater_condon.hpp"

#include <bit>

#include "core/error.hpp"

namespace sqdw {

namespace {

// Occupied orbitals of a 32-bit string, ascending.
inline int occ_list(std::uint32_t bits, int* out) {
  int n = 0;
  while (bits) {
    out[n++] = std::countr_zero(bits);
    bits &= bits - 1;
  }
  return n;
}

// Parity of same-spin excitation p -> q given that spin's occupation.
inline int excitation_sign(std::uint32_t bits, int p, int q) {
  const int lo = std::min(p, q), hi = std::max(p, q);
  std::uint32_t between = bits & (((1u << hi) - 1u) ^ ((1u << (lo + 1)) - 1u));
  return (std::popcount(between) & 1) ? -1 : 1;
}

struct DetScratch {
  int occ_a[32], occ_b[32], emp_a[32], emp_b[32];
  int na, nb, ea, eb;

  void load(const Determinant& d, int n_orb) {
    na = occ_list(d.alpha, occ_a);
    nb = occ_list(d.beta, occ_b);
    const std::uint32_t mask =
        (n_orb == 32) ? 0xffffffffu : ((1u << n_orb) - 1u);
    ea = occ_list(~d.alpha & mask, emp_a);
    eb = occ_list(~d.beta & mask, emp_b);
  }
};

double diagonal_element(const DetScratch& s, const MOIntegrals& mo) {
  double e = 0.0;
  for (int i = 0; i < s.na; ++i) e += mo.h(s.occ_a[i], s.occ_a[i]);
  for (int i = 0; i < s.nb; ++i) e += mo.h(s.occ_b[i], s.occ_b[i]);
  for (int i = 0; i < s.na; ++i)
    for (int j = i + 1; j < s.na; ++j) {
      const int p = s.occ_a[i], q = s.occ_a[j];
      e += mo.g(p, p, q, q) - mo.g(p, q, q, p);
    }
  for (int i = 0; i < s.nb; ++i)
    for (int j = i + 1; j < s.nb; ++j) {
      const int p = s.occ_b[i], q = s.occ_b[j];
      e += mo.g(p, p, q, q) - mo.g(p, q, q, p);
    }
  for (int i = 0; i < s.na; ++i)
    for (int j = 0; j < s.nb; ++j)
      e += mo.g(s.occ_a[i], s.occ_a[i], s.occ_b[j], s.occ_b[j]);
  return e;
}

// <D'|H|D> for a single excitation p -> q of the given spin.
double single_element(const DetScratch& s, bool beta_spin, int p, int q,
                      const MOIntegrals& mo) {
  double e = mo.h(p, q);
  const int* occ_same = beta_spin ? s.occ_b : s.occ_a;
  const int n_same = beta_spin ? s.nb : s.na;
  const int* occ_other = beta_spin ? s.occ_a : s.occ_b;
  const int n_other = beta_spin ? s.na : s.nb;
  for (int k = 0; k < n_same; ++k) {
    const int m = occ_same[k];
    if (m == p) continue;
    e += mo.g(p, q, m, m) - mo.g(p, m, m, q);
  }
  for (int k = 0; k < n_other; ++k) {
    const int m = occ_other[k];
    e += mo.g(p, q, m, m);
  }
  return e;
}

}  // namespace

double slater_condon_element(const Determinant& bra, const Determinant& ket,
                             int n_orb, const MOIntegrals& mo) {
  const std::uint32_t da = bra.alpha ^ ket.alpha;
  const std::uint32_t db = bra.beta ^ ket.beta;
  const int ka = std::popcount(da) / 2;
  const int kb = std::popcount(db) / 2;
  if (std::popcount(da) % 2 || std::popcount(db) % 2) return 0.0;
  const int degree = ka + kb;
  if (degree > 2) return 0.0;

  DetScratch s;
  s.load(ket, n_orb);

  if (degree == 0) return diagonal_element(s, mo);

  if (degree == 1) {
    const bool beta_spin = (kb == 1);
    const std::uint32_t diff = beta_spin ? db : da;
    const std::uint32_t ket_bits = beta_spin ? ket.beta : ket.alpha;
    const int p = std::countr_zero(diff & ket_bits);           // occupied in ket
    const int q = std::countr_zero(diff & ~ket_bits);          // occupied in bra
    const int sign = excitation_sign(ket_bits, p, q);
    return sign * single_element(s, beta_spin, p, q, mo);
  }

  if (ka == 1 && kb == 1) {
    // opposite-spin double
    const int p = std::countr_zero(da & ket.alpha);
    const int q = std::countr_zero(da & ~ket.alpha);
    const int r = std::countr_zero(db & ket.beta);
    const int t = std::countr_zero(db & ~ket.beta);
    const int sign =
        excitation_sign(ket.alpha, p, q) * excitation_sign(ket.beta, r, t);
    return sign * mo.g(p, q, r, t);
  }

  // same-spin double
  const bool beta_spin = (kb == 2);
  const std::uint32_t diff = beta_spin ? db : da;
  const std::uint32_t ket_bits = beta_spin ? ket.beta : ket.alpha;
  std::uint32_t from = diff & ket_bits, to = diff & ~ket_bits;
  const int p = std::countr_zero(from);
  from &= from - 1;
  const int r = std::countr_zero(from);
  const int q = std::countr_zero(to);
  to &= to - 1;
  const int t = std::countr_zero(to);
  // align p->q then r->t on the intermediate string
  const int s1 = excitation_sign(ket_bits, p, q);
  const std::uint32_t inter = (ket_bits ^ (1u << p)) | (1u << q);
  const int s2 = excitation_sign(inter, r, t);
  return s1 * s2 * (mo.g(p, q, r, t) - mo.g(p, t, r, q));
}

SparseSym build_subspace_hamiltonian(const DetSpace& space,
                                     const MOIntegrals& mo) {
  require(space.size() > 0, ErrorKind::invalid_argument, "empty subspace");
  require(space.n_orb == mo.n_orb, ErrorKind::invalid_argument,
          "orbital count mismatch between space and integrals");

  const int n = space.n_orb;
  SparseSym h;
  h.dim = space.size();
  h.row_ptr.assign(h.dim + 1, 0);
  h.diagonal.resize(h.dim);

  DetScratch s;
  std::vector<std::uint32_t> cols;
  std::vector<double> vals;
  cols.reserve(64);

  for (std::size_t row = 0; row < h.dim; ++row) {
    const Determinant& d = space[row];
    s.load(d, n);
    cols.clear();
    vals.clear();

    const double diag = diagonal_element(s, mo);
    h.diagonal[row] = diag;
    cols.push_back(static_cast<std::uint32_t>(row));
    vals.push_back(diag);

    auto try_push = [&](const Determinant& other, double element) {
      if (element == 0.0) return;
      const long idx = space.index_of(other);
      if (idx < 0) return;
      cols.push_back(static_cast<std::uint32_t>(idx));
      vals.push_back(element);
    };

    // alpha singles
    for (int io = 0; io < s.na; ++io)
      for (int ie = 0; ie < s.ea; ++ie) {
        const int p = s.occ_a[io], q = s.emp_a[ie];
        Determinant d2{d.alpha ^ (1u << p) ^ (1u << q), d.beta};
        const int sign = excitation_sign(d.alpha, p, q);
        try_push(d2, sign * single_element(s, false, p, q, mo));
      }
    // beta singles
    for (int io = 0; io < s.nb; ++io)
      for (int ie = 0; ie < s.eb; ++ie) {
        const int p = s.occ_b[io], q = s.emp_b[ie];
        Determinant d2{d.alpha, d.beta ^ (1u << p) ^ (1u << q)};
        const int sign = excitation_sign(d.beta, p, q);
        try_push(d2, sign * single_element(s, true, p, q, mo));
      }
    // same-spin doubles
    for (int spin = 0; spin < 2; ++spin) {
      const std::uint32_t bits = spin ? d.beta : d.alpha;
      const int* occ = spin ? s.occ_b : s.occ_a;
      const int* emp = spin ? s.emp_b : s.emp_a;
      const int no = spin ? s.nb : s.na;
      const int ne = spin ? s.eb : s.ea;
      for (int io = 0; io < no; ++io)
        for (int jo = io + 1; jo < no; ++jo)
          for (int ie = 0; ie < ne; ++ie)
            for (int je = ie + 1; je < ne; ++je) {
              const int p = occ[io], r = occ[jo];
              const int q = emp[ie], t = emp[je];
              const std::uint32_t bits2 =
                  bits ^ (1u << p) ^ (1u << r) ^ (1u << q) ^ (1u << t);
              Determinant d2 = spin ? Determinant{d.alpha, bits2}
                                    : Determinant{bits2, d.beta};
              const int s1 = excitation_sign(bits, p, q);
              const std::uint32_t inter = (bits ^ (1u << p)) | (1u << q);
              const int s2 = excitation_sign(inter, r, t);
              try_push(d2,
                       s1 * s2 * (mo.g(p, q, r, t) - mo.g(p, t, r, q)));
            }
    }
    // opposite-spin doubles
    for (int io = 0; io < s.na; ++io)
      for (int ie = 0; ie < s.ea; ++ie) {
        const int p = s.occ_a[io], q = s.emp_a[ie];
        const std::uint32_t a2 = d.alpha ^ (1u << p) ^ (1u << q);
        const int sa = excitation_sign(d.alpha, p, q);
        for (int jo = 0; jo < s.nb; ++jo)
          for (int je = 0; je < s.eb; ++je) {
            const int r = s.occ_b[jo], t = s.emp_b[je];
            Determinant d2{a2, d.beta ^ (1u << r) ^ (1u << t)};
            const int sb = excitation_sign(d.beta, r, t);
            try_push(d2, sa * sb * mo.g(p, q, r, t));
          }
      }

    h.row_ptr[row + 1] = h.row_ptr[row] + cols.size();
    h.cols.insert(h.cols.end(), cols.begin(), cols.end());
    h.vals.insert(h.vals.end(), vals.begin(), vals.end());
  }
  return h;
}

}  // namespace sqdw
