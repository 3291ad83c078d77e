#include "qbg/bell.hpp"

#include <cmath>

#include "qbg/errors.hpp"

namespace qbg {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::local: return "local";
    case Regime::quantum: return "quantum";
    default: return "super-quantum";
  }
}

Regime classify(double delta, double tol) {
  double a = std::abs(delta);
  if (a <= 2.0 + tol) return Regime::local;
  if (a <= 2.0 * std::sqrt(2.0) + tol) return Regime::quantum;
  return Regime::super_quantum;
}

std::array<double, 4> correlations(const JointDistribution& d, double tol) {
  if (!check_normalization(d, tol))
    throw ValidationError("table blocks are not normalized");
  return table::correlations(d.values());
}

double chsh_delta(const JointDistribution& d, double tol) {
  auto c = correlations(d, tol);
  return c[0] + c[1] + c[2] - c[3];
}

double chsh_delta_reduced(const JointDistribution& d, double tol) {
  if (!check_normalization(d, tol))
    throw ValidationError("table blocks are not normalized");
  if (!check_no_signaling(d).pass(tol))
    throw ValidationError("table is signaling; reduced CHSH form does not apply");
  return table::chsh_delta_reduced(d.values());
}

ChshReport chsh_report(const JointDistribution& d, double tol) {
  auto c = correlations(d, tol);
  double delta = c[0] + c[1] + c[2] - c[3];
  return {c, delta, classify(delta, tol)};
}

}  // namespace qbg
