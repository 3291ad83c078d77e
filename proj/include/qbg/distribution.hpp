#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qbg/rng.hpp"
#include "qbg/table_math.hpp"

namespace qbg {

// Default slack for feasibility checks (probabilities, block sums, marginal
// consistency) on floating-point inputs.
inline constexpr double kFeasTol = 1e-9;
// Slack for algebraic identities evaluated on exactly-representable inputs.
inline constexpr double kIdentityTol = 1e-12;

// One behavioral strategy per party and type: probability of playing the
// first action. p/q are Alice's type-1/type-2 probabilities, p_/q_ Bob's.
struct BehavioralStrategy {
  double p, q, p_, q_;
};

// Throws ValidationError unless all four entries are finite and in [0,1].
void require_valid(const BehavioralStrategy& s);

// Joint outcome table over the four measurement-pair blocks (see table_math
// for the layout). Construction clamps entries within tol of [0,1] onto the
// interval and rejects anything farther out; block sums are NOT enforced
// here, so diagnostic checks can be run on deliberately broken tables.
class JointDistribution {
 public:
  JointDistribution() { eps_.fill(0.0); }
  explicit JointDistribution(const std::array<double, 16>& eps, double tol = kFeasTol);

  // 0-based access.
  double operator[](int i) const { return eps_[i]; }
  // 1-based access matching the e1..e16 naming.
  double eps(int j) const { return eps_[j - 1]; }
  const std::array<double, 16>& values() const { return eps_; }

 private:
  std::array<double, 16> eps_;
};

// The eight independent table entries (e1, e4, e5, e8, e9, e12, e14, e15).
struct IndependentSet {
  std::array<double, 8> mu;
};

struct NoSignalingReport {
  std::array<double, 8> residuals;
  double max_abs() const;
  bool pass(double tol = kFeasTol) const { return max_abs() <= tol; }
};

// Product table of a behavioral strategy (always normalized, non-signaling).
JointDistribution from_strategy(const BehavioralStrategy& s);

// True when every block sums to 1 within tol.
bool check_normalization(const JointDistribution& d, double tol = kFeasTol);

// All eight marginal-consistency residuals; pass(tol) summarizes.
NoSignalingReport check_no_signaling(const JointDistribution& d);

// Extracts the independent coordinates of a table.
IndependentSet independent_of(const JointDistribution& d);

// Rebuilds a full table from independent entries. Returns nullopt when any
// reconstructed entry leaves [0,1] by more than tol; if `violations` is given
// it receives the 1-based indices of the offending entries.
std::optional<JointDistribution> complete_from_independent(
    const IndependentSet& ind, double tol = kFeasTol, std::vector<int>* violations = nullptr);

// Recovers a behavioral strategy whose product table reproduces d within tol
// (checked entrywise), or nullopt when d is not a product table.
std::optional<BehavioralStrategy> is_factorizable(const JointDistribution& d, double tol = kFeasTol);

// Uniform random strategy.
BehavioralStrategy sample_strategy(Rng& rng);

// Random normalized non-signaling table: rejection-samples the independent
// coordinates until completion is feasible. Deterministic given the Rng
// state; throws after 1e6 rejected draws (not reachable in practice).
JointDistribution sample_no_signaling(Rng& rng);
JointDistribution sample_no_signaling(std::uint64_t seed);

}  // namespace qbg
