#pragma once

#include <functional>
#include <vector>

namespace sqdw {

struct DavidsonResult {
  double e0 = 0.0;
  std::vector<double> v0;
  int cycles = 0;
};

struct DavidsonOptions {
  int max_cycles = 200;
  double tol = 1e-8;        // on ||H v - e v||
  int restart_dim = 25;
  int dense_cutoff = 64;    // dense diagonalization at or below this size
};

using MatVec = std::function<void(const double*, double*)>;

// Lowest eigenpair of a symmetric operator given its action and diagonal.
// Block size 1, Jacobi preconditioner, thick restart with the current Ritz
// vector. Throws ErrorKind::not_converged (best estimate in the message)
// when max_cycles is exhausted.
DavidsonResult davidson_lowest(const MatVec& apply, const std::vector<double>& diagonal,
                               std::size_t dim, const DavidsonOptions& opt = {});

}  // namespace sqdw
