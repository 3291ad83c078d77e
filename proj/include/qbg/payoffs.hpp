#pragma once

#include <array>

#include "qbg/distribution.hpp"
#include "qbg/game.hpp"
#include "qbg/rational.hpp"

namespace qbg {

// Expected payoffs per player type under the prior's conditional weights.
struct PayoffProfile {
  double a1, a2, b1, b2;
  double sum() const { return a1 + a2 + b1 + b2; }
};

// Welfare = sum of the four per-type payoffs.
inline double welfare(const PayoffProfile& p) { return p.sum(); }

// Payoffs when both players use behavioral strategies (factorizable play).
// Throws ValidationError on an invalid game or strategy.
PayoffProfile payoffs_from_strategy(const GameSpec& g, const BehavioralStrategy& s);

// Payoffs when play is driven by an arbitrary joint table: each type-pair
// block reads its outcome distribution from the corresponding table block.
// Requires a normalized table within tol.
PayoffProfile payoffs_from_distribution(const GameSpec& g, const JointDistribution& d,
                                        double tol = kFeasTol);

// Welfare as a linear function of the 16 table entries: weight vector w with
// welfare(d) = sum_j w[j] * e_{j+1}.
std::array<double, 16> welfare_weights(const GameSpec& g);
std::array<Rational, 16> welfare_weights_exact(const GameSpec& g);

// Residual of the benchmark-game identity welfare = delta/2 + 2 on a
// normalized non-signaling table (throws when the preconditions fail).
// Vanishes to rounding for every such table.
double welfare_delta_residual(const GameSpec& g, const JointDistribution& d,
                              double tol = kFeasTol);

}  // namespace qbg
