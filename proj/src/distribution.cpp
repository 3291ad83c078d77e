#include "qbg/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qbg/errors.hpp"

namespace qbg {

void require_valid(const BehavioralStrategy& s) {
  const double v[4] = {s.p, s.q, s.p_, s.q_};
  static const char* const kNames[4] = {"p", "q", "p_", "q_"};
  for (int i = 0; i < 4; ++i)
    if (!std::isfinite(v[i]) || v[i] < 0.0 || v[i] > 1.0)
      throw ValidationError(std::string("strategy entry ") + kNames[i] + " outside [0,1]");
}

JointDistribution::JointDistribution(const std::array<double, 16>& eps, double tol) {
  for (int i = 0; i < 16; ++i) {
    double v = eps[i];
    if (!std::isfinite(v) || v < -tol || v > 1.0 + tol)
      throw ValidationError("table entry e" + std::to_string(i + 1) + " = " + std::to_string(v) +
                            " outside [0,1]");
    eps_[i] = std::clamp(v, 0.0, 1.0);
  }
}

double NoSignalingReport::max_abs() const {
  double m = 0.0;
  for (double r : residuals) m = std::max(m, std::abs(r));
  return m;
}

JointDistribution from_strategy(const BehavioralStrategy& s) {
  require_valid(s);
  return JointDistribution(table::from_strategy(s.p, s.q, s.p_, s.q_));
}

bool check_normalization(const JointDistribution& d, double tol) {
  for (double s : table::block_sums(d.values()))
    if (std::abs(s - 1.0) > tol) return false;
  return true;
}

NoSignalingReport check_no_signaling(const JointDistribution& d) {
  return {table::no_signaling_residuals(d.values())};
}

IndependentSet independent_of(const JointDistribution& d) {
  return {table::independent_of(d.values())};
}

std::optional<JointDistribution> complete_from_independent(const IndependentSet& ind, double tol,
                                                           std::vector<int>* violations) {
  auto full = table::complete(ind.mu);
  bool ok = true;
  for (int i = 0; i < 16; ++i) {
    if (full[i] < -tol || full[i] > 1.0 + tol) {
      ok = false;
      if (violations) violations->push_back(i + 1);
    }
  }
  if (!ok) return std::nullopt;
  return JointDistribution(full, tol);
}

std::optional<BehavioralStrategy> is_factorizable(const JointDistribution& d, double tol) {
  // Candidate marginals: Alice's + probability per setting, Bob's likewise.
  BehavioralStrategy s{d.eps(1) + d.eps(2), d.eps(9) + d.eps(10), d.eps(1) + d.eps(3),
                       d.eps(5) + d.eps(7)};
  auto clamp01 = [](double v) { return std::clamp(v, 0.0, 1.0); };
  s = {clamp01(s.p), clamp01(s.q), clamp01(s.p_), clamp01(s.q_)};
  auto product = table::from_strategy(s.p, s.q, s.p_, s.q_);
  for (int i = 0; i < 16; ++i)
    if (std::abs(product[i] - d[i]) > tol) return std::nullopt;
  return s;
}

BehavioralStrategy sample_strategy(Rng& rng) {
  return {rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()};
}

JointDistribution sample_no_signaling(Rng& rng) {
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    IndependentSet ind;
    for (double& m : ind.mu) m = rng.uniform();
    if (auto d = complete_from_independent(ind, 0.0)) return *d;
  }
  throw std::runtime_error("no-signaling sampler exceeded retry budget");
}

JointDistribution sample_no_signaling(std::uint64_t seed) {
  Rng rng(seed);
  return sample_no_signaling(rng);
}

}  // namespace qbg
