#pragma once

#include <vector>

#include "qbg/rational.hpp"

namespace qbg {

struct LpSolution {
  Rational value;
  std::vector<Rational> x;
  int pivots;
};

// Maximizes c.x subject to A x = b, x >= 0, in exact rational arithmetic.
// Two-phase simplex with Bland's rule, so termination is guaranteed and the
// returned basic solution is an exact certificate. Throws ValidationError on
// inconsistent dimensions or an infeasible program, std::runtime_error on an
// unbounded one.
LpSolution simplex_max(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace qbg
