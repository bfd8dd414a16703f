#include <doctest.h>

#include <cmath>
#include <initializer_list>

#include "core/boys.hpp"

using namespace sqdw;

namespace {

// quadrature oracle: F_m(x) = int_0^1 t^{2m} exp(-x t^2) dt, Simpson rule
double boys_quadrature(int m, double x) {
  const int n = 20000;  // even
  const double h = 1.0 / n;
  auto f = [&](double t) { return std::pow(t, 2 * m) * std::exp(-x * t * t); };
  double acc = f(0.0) + f(1.0);
  for (int i = 1; i < n; ++i) acc += f(i * h) * ((i % 2) ? 4.0 : 2.0);
  return acc * h / 3.0;
}

}  // namespace

TEST_CASE("boys special values at x = 0") {
  CHECK(boys(0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  for (int m = 0; m <= 8; ++m)
    CHECK(boys(m, 0.0) == doctest::Approx(1.0 / (2 * m + 1)).epsilon(1e-14));
}

TEST_CASE("boys asymptotic regime") {
  for (double x : {30.5, 36.0, 50.0, 120.0}) {
    const double ref = 0.5 * std::sqrt(M_PI / x);
    CHECK(std::abs(boys(0, x) - ref) < 1e-10);
  }
}

TEST_CASE("boys matches quadrature across orders and arguments") {
  for (int m = 0; m <= 6; ++m)
    for (double x : {1e-8, 0.1, 0.5, 1.0, 3.0, 7.5, 15.0, 25.0, 34.0, 40.0}) {
      const double ref = boys_quadrature(m, x);
      CHECK(std::abs(boys(m, x) - ref) < 1e-10);
    }
}

TEST_CASE("boys downward recursion consistency") {
  // F_{m-1} = (2x F_m + e^{-x}) / (2m - 1) must hold for the array fill
  double f[9];
  for (double x : {0.3, 2.0, 10.0, 33.0}) {
    boys_array(8, x, f);
    for (int m = 8; m > 0; --m) {
      const double lhs = f[m - 1];
      const double rhs = (2.0 * x * f[m] + std::exp(-x)) / (2 * m - 1);
      CHECK(std::abs(lhs - rhs) < 1e-13);
    }
  }
}
