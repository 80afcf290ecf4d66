#pragma once

#include <vector>

#include "ratfunc.hpp"

namespace qcover {

/// Exact rank of a matrix over Q (entries consumed).
int rank_rat(std::vector<std::vector<Rat>> m);

/// Exact rank of a matrix over the rational-function field Q(q).
int rank_ratfunc(std::vector<std::vector<RatFunc>> m);

/// Solve A x = b exactly over Q.  `consistent` is false when no solution
/// exists; free coordinates (if the solution is not unique) are set to zero
/// and `unique` reports whether that happened.
struct LinSolve {
  bool consistent = false;
  bool unique = false;
  int rank = 0;
  std::vector<Rat> x;
};
LinSolve solve_rat(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

}  // namespace qcover
