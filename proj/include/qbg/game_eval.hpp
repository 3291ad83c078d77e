#pragma once

#include <array>

#include "qbg/game.hpp"
#include "qbg/rational.hpp"
#include "qbg/table_math.hpp"

namespace qbg {

namespace detail {

template <class T>
T scalar_cast(const Scalar& s) {
  if constexpr (std::is_same_v<T, Scalar>)
    return s;
  else if constexpr (std::is_same_v<T, Rational>)
    return s.to_rational();
  else
    return static_cast<T>(s.to_double());
}

}  // namespace detail

// Game data converted once to a uniform numeric type, plus the conditional
// type weights used in the interim (per-type) payoffs. A type with zero prior
// marginal never occurs; its conditional weights are set to zero, which makes
// the corresponding per-type payoff zero by convention.
template <class T>
struct GameEval {
  T cond_a[2][2];  // cond_a[at][bt] = P(Bob type bt | Alice type at)
  T cond_b[2][2];  // cond_b[bt][at] = P(Alice type at | Bob type bt)
  T alice[2][2][2][2];  // [at][bt][row][col]
  T bob[2][2][2][2];
};

template <class T>
GameEval<T> make_game_eval(const GameSpec& g) {
  using detail::scalar_cast;
  GameEval<T> ev{};
  T prior[2][2];
  for (int at = 0; at < 2; ++at)
    for (int bt = 0; bt < 2; ++bt) prior[at][bt] = scalar_cast<T>(g.prior[at][bt]);
  for (int at = 0; at < 2; ++at) {
    T row = prior[at][0] + prior[at][1];
    for (int bt = 0; bt < 2; ++bt) ev.cond_a[at][bt] = row == T(0) ? T(0) : prior[at][bt] / row;
  }
  for (int bt = 0; bt < 2; ++bt) {
    T col = prior[0][bt] + prior[1][bt];
    for (int at = 0; at < 2; ++at) ev.cond_b[bt][at] = col == T(0) ? T(0) : prior[at][bt] / col;
  }
  for (int at = 0; at < 2; ++at)
    for (int bt = 0; bt < 2; ++bt)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          ev.alice[at][bt][r][c] = scalar_cast<T>(g.blocks[at][bt].alice[r][c]);
          ev.bob[at][bt][r][c] = scalar_cast<T>(g.blocks[at][bt].bob[r][c]);
        }
  return ev;
}

// Expected per-type payoffs (A1, A2, B1, B2) when Alice plays action 0 with
// probability p (type 1) / q (type 2) and Bob with p_ / q_.
template <class T>
std::array<T, 4> type_payoffs(const GameEval<T>& ev, const T& p, const T& q, const T& p_,
                              const T& q_) {
  const T one(1);
  const T a_mix[2][2] = {{p, one - p}, {q, one - q}};
  const T b_mix[2][2] = {{p_, one - p_}, {q_, one - q_}};
  auto bilinear = [&](const T(&m)[2][2], int at, int bt) {
    T acc(0);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) acc += a_mix[at][r] * m[r][c] * b_mix[bt][c];
    return acc;
  };
  std::array<T, 4> pi{T(0), T(0), T(0), T(0)};
  for (int at = 0; at < 2; ++at)
    for (int bt = 0; bt < 2; ++bt) {
      pi[at] += ev.cond_a[at][bt] * bilinear(ev.alice[at][bt], at, bt);
      pi[2 + bt] += ev.cond_b[bt][at] * bilinear(ev.bob[at][bt], at, bt);
    }
  return pi;
}

// Coefficients of each per-type payoff as a linear function of a 16-entry
// joint table, laid out per table_math. Row t in {0:A1, 1:A2, 2:B1, 3:B2}.
template <class T>
std::array<std::array<T, 16>, 4> type_payoff_weights(const GameEval<T>& ev) {
  std::array<std::array<T, 16>, 4> w{};
  for (auto& row : w) row.fill(T(0));
  for (int at = 0; at < 2; ++at)
    for (int bt = 0; bt < 2; ++bt) {
      int blk = 2 * at + bt;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          int j = table::index(blk, r, c);
          w[at][j] += ev.cond_a[at][bt] * ev.alice[at][bt][r][c];
          w[2 + bt][j] += ev.cond_b[bt][at] * ev.bob[at][bt][r][c];
        }
    }
  return w;
}

}  // namespace qbg
