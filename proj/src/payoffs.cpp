#include "qbg/payoffs.hpp"

#include "qbg/bell.hpp"
#include "qbg/errors.hpp"
#include "qbg/game_eval.hpp"

namespace qbg {

namespace {

void require_valid_game(const GameSpec& g) {
  if (auto issues = validate(g); !issues.empty())
    throw ValidationError("invalid game: " + issues.front());
}

}  // namespace

PayoffProfile payoffs_from_strategy(const GameSpec& g, const BehavioralStrategy& s) {
  require_valid_game(g);
  require_valid(s);
  auto ev = make_game_eval<double>(g);
  auto pi = type_payoffs(ev, s.p, s.q, s.p_, s.q_);
  return {pi[0], pi[1], pi[2], pi[3]};
}

PayoffProfile payoffs_from_distribution(const GameSpec& g, const JointDistribution& d,
                                        double tol) {
  require_valid_game(g);
  if (!check_normalization(d, tol))
    throw ValidationError("table blocks are not normalized");
  auto ev = make_game_eval<double>(g);
  auto w = type_payoff_weights(ev);
  PayoffProfile out{0.0, 0.0, 0.0, 0.0};
  double* fields[4] = {&out.a1, &out.a2, &out.b1, &out.b2};
  for (int t = 0; t < 4; ++t) {
    double acc = 0.0;
    for (int j = 0; j < 16; ++j) acc += w[t][j] * d[j];
    *fields[t] = acc;
  }
  return out;
}

std::array<double, 16> welfare_weights(const GameSpec& g) {
  require_valid_game(g);
  auto w = type_payoff_weights(make_game_eval<double>(g));
  std::array<double, 16> total{};
  for (int j = 0; j < 16; ++j) total[j] = w[0][j] + w[1][j] + w[2][j] + w[3][j];
  return total;
}

std::array<Rational, 16> welfare_weights_exact(const GameSpec& g) {
  require_valid_game(g);
  auto w = type_payoff_weights(make_game_eval<Rational>(g));
  std::array<Rational, 16> total{};
  for (int j = 0; j < 16; ++j) total[j] = w[0][j] + w[1][j] + w[2][j] + w[3][j];
  return total;
}

double welfare_delta_residual(const GameSpec& g, const JointDistribution& d, double tol) {
  PayoffProfile profile = payoffs_from_distribution(g, d, tol);
  double delta = chsh_delta_reduced(d, tol);
  return profile.sum() - (delta / 2.0 + 2.0);
}

}  // namespace qbg
