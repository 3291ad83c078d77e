#pragma once

#include <array>
#include <string>

#include "qbg/distribution.hpp"

namespace qbg {

// Where a CHSH value sits relative to the classical bound 2 and the quantum
// bound 2*sqrt(2). Classification of |delta|:
//   local:         |delta| <= 2 + tol
//   quantum:       2 + tol < |delta| <= 2*sqrt(2) + tol
//   super_quantum: otherwise (up to the algebraic maximum 4)
enum class Regime { local, quantum, super_quantum };

const char* to_string(Regime r);

Regime classify(double delta, double tol = kFeasTol);

struct ChshReport {
  std::array<double, 4> corr;  // blocks (a1b1, a1b2, a2b1, a2b2)
  double delta;
  Regime regime;
};

// Per-block correlators. Throws ValidationError unless the table is
// normalized within tol.
std::array<double, 4> correlations(const JointDistribution& d, double tol = kFeasTol);

// CHSH combination corr[0] + corr[1] + corr[2] - corr[3].
double chsh_delta(const JointDistribution& d, double tol = kFeasTol);

// Equivalent reduced form 2*(e1+e4+e5+e8+e9+e12+e14+e15) - 4. Requires a
// normalized AND non-signaling table (throws otherwise); on that domain it
// agrees with chsh_delta to rounding.
double chsh_delta_reduced(const JointDistribution& d, double tol = kFeasTol);

ChshReport chsh_report(const JointDistribution& d, double tol = kFeasTol);

}  // namespace qbg
