#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qbg/scalar.hpp"

namespace qbg {

// 2x2 payoff matrices for one type pair. Rows index Alice's action, columns
// Bob's action; action 0 is the first entry of GameSpec::actions.
struct PayoffBlock {
  std::array<std::array<Scalar, 2>, 2> alice{};
  std::array<std::array<Scalar, 2>, 2> bob{};
};

// Two-player Bayesian game with two types per player. blocks[at][bt] holds
// the payoffs when Alice has type at+1 and Bob type bt+1; prior[at][bt] is
// the probability of that type pair.
struct GameSpec {
  std::array<std::array<Scalar, 2>, 2> prior{};
  std::array<std::array<PayoffBlock, 2>, 2> blocks{};
  std::array<std::string, 2> actions{"B", "S"};
};

// The benchmark game: uniform prior over type pairs; three type pairs play a
// coordination game (payoff 1 on the diagonal), the fourth an
// anti-coordination game (payoff 1 off the diagonal).
GameSpec benchmark_game();

// Diagnostics for a malformed game, empty when valid. Checks prior entries in
// [0,1] summing to 1 and all payoffs finite.
std::vector<std::string> validate(const GameSpec& g);

// One cell of the pure-strategy normal form: expected payoffs per player type
// ((A1, A2), (B1, B2)) under the prior's conditional type weights.
struct NormalFormCell {
  Scalar a1, a2, b1, b2;
  Scalar sum() const { return a1 + a2 + b1 + b2; }
};

// 4x4 pure-strategy matrix. Rows are Alice's pure pairs (action for type 1,
// action for type 2), columns Bob's, ordered (B,B), (B,S), (S,B), (S,S) in
// terms of the game's two action labels.
struct NormalForm {
  std::array<std::array<NormalFormCell, 4>, 4> cells{};
};

// Pure-pair row/column index -> (first-type action prob, second-type action
// prob) as 0/1 values: index 0 -> (1,1), 1 -> (1,0), 2 -> (0,1), 3 -> (0,0).
std::pair<int, int> pure_pair(int idx);

// Label such as "(B,S)" for a pure-pair index, using g.actions.
std::string pure_pair_label(const GameSpec& g, int idx);

// Throws ValidationError when validate(g) is non-empty.
NormalForm normal_form(const GameSpec& g);

}  // namespace qbg
