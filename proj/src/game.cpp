#include "qbg/game.hpp"

#include "qbg/errors.hpp"
#include "qbg/game_eval.hpp"

namespace qbg {

GameSpec benchmark_game() {
  GameSpec g;
  const Scalar quarter = Scalar::ratio(1, 4);
  const Scalar one(1), zero(0);
  std::array<std::array<Scalar, 2>, 2> diag = {{{one, zero}, {zero, one}}};
  std::array<std::array<Scalar, 2>, 2> anti = {{{zero, one}, {one, zero}}};
  for (int at = 0; at < 2; ++at)
    for (int bt = 0; bt < 2; ++bt) {
      g.prior[at][bt] = quarter;
      auto& m = (at == 1 && bt == 1) ? anti : diag;
      g.blocks[at][bt].alice = m;
      g.blocks[at][bt].bob = m;
    }
  return g;
}

std::vector<std::string> validate(const GameSpec& g) {
  std::vector<std::string> issues;
  Scalar total(0);
  for (int at = 0; at < 2; ++at)
    for (int bt = 0; bt < 2; ++bt) {
      const Scalar& p = g.prior[at][bt];
      if (!p.finite() || p < Scalar(0) || p > Scalar(1))
        issues.push_back("prior[" + std::to_string(at + 1) + "][" + std::to_string(bt + 1) +
                         "] outside [0,1]");
      total += p;
    }
  // Exact priors must sum to exactly 1; floating ones get a small slack.
  bool prior_ok = total.exact() ? total == Scalar(1)
                                : std::abs(total.to_double() - 1.0) <= 1e-9;
  if (!prior_ok) issues.push_back("prior entries do not sum to 1 (got " + total.str() + ")");
  for (int at = 0; at < 2; ++at)
    for (int bt = 0; bt < 2; ++bt)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          if (!g.blocks[at][bt].alice[r][c].finite() || !g.blocks[at][bt].bob[r][c].finite()) {
            issues.push_back("non-finite payoff in block[" + std::to_string(at + 1) + "][" +
                             std::to_string(bt + 1) + "]");
            r = c = 2;  // one diagnostic per block is enough
          }
        }
  if (g.actions[0].empty() || g.actions[1].empty() || g.actions[0] == g.actions[1])
    issues.push_back("action labels must be two distinct non-empty strings");
  return issues;
}

std::pair<int, int> pure_pair(int idx) {
  switch (idx) {
    case 0: return {1, 1};
    case 1: return {1, 0};
    case 2: return {0, 1};
    default: return {0, 0};
  }
}

std::string pure_pair_label(const GameSpec& g, int idx) {
  auto [first, second] = pure_pair(idx);
  return "(" + g.actions[first ? 0 : 1] + "," + g.actions[second ? 0 : 1] + ")";
}

NormalForm normal_form(const GameSpec& g) {
  if (auto issues = validate(g); !issues.empty())
    throw ValidationError("invalid game: " + issues.front());
  auto ev = make_game_eval<Scalar>(g);
  NormalForm nf;
  for (int r = 0; r < 4; ++r) {
    auto [p, q] = pure_pair(r);
    for (int c = 0; c < 4; ++c) {
      auto [p_, q_] = pure_pair(c);
      auto pi = type_payoffs(ev, Scalar(p), Scalar(q), Scalar(p_), Scalar(q_));
      nf.cells[r][c] = {pi[0], pi[1], pi[2], pi[3]};
    }
  }
  return nf;
}

}  // namespace qbg
