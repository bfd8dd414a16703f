#include "core/boys.hpp"

#include <cmath>

#include "core/constants.hpp"

namespace sqdw {

namespace {
constexpr double kCrossover = 35.0;  // e^{-35} < 1e-15, asymptotic regime
}

void boys_array(int m_max, double x, double* out) {
  if (x < 1e-14) {
    for (int m = 0; m <= m_max; ++m) out[m] = 1.0 / (2 * m + 1);
    return;
  }

  if (x > kCrossover) {
    out[0] = 0.5 * std::sqrt(kPi / x);
    const double inv2x = 0.5 / x;  // e^{-x} negligible here
    for (int m = 0; m < m_max; ++m) out[m + 1] = (2 * m + 1) * out[m] * inv2x;
    return;
  }

  // Convergent series for the top order:
  //   F_m(x) = e^{-x} sum_k (2x)^k / ((2m+1)(2m+3)...(2m+2k+1))
  const double expmx = std::exp(-x);
  double term = 1.0 / (2 * m_max + 1);
  double sum = term;
  for (int k = 1; k < 400; ++k) {
    term *= 2.0 * x / (2 * m_max + 2 * k + 1);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  out[m_max] = expmx * sum;
  for (int m = m_max; m > 0; --m)
    out[m - 1] = (2.0 * x * out[m] + expmx) / (2 * m - 1);
}

double boys(int m, double x) {
  double buf[32];
  boys_array(m, x, buf);
  return buf[m];
}

}  // namespace sqdw
