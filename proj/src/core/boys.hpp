#pragma once

namespace sqdw {

// Boys function F_m(x) = \int_0^1 t^{2m} exp(-x t^2) dt.
// Series seed at the highest order with downward recursion below the
// asymptotic crossover; closed-form F_0 with upward recursion above it.
// Target accuracy 1e-14 absolute.
double boys(int m, double x);

// Fills out[0..m_max] with F_0(x) .. F_{m_max}(x).
void boys_array(int m_max, double x, double* out);

}  // namespace sqdw
