#pragma once

#include <array>

namespace qbg::table {

// Layout of a 16-entry joint probability table, shared by every module.
//
// The table covers the four measurement-pair blocks in this order:
//   block 0: (D1, D1')   entries e1  .. e4
//   block 1: (D1, D2')   entries e5  .. e8
//   block 2: (D2, D1')   entries e9  .. e12
//   block 3: (D2, D2')   entries e13 .. e16
// Within a block the four outcomes are ordered (+,+), (+,-), (-,+), (-,-).
// Arrays are 0-based; names and diagnostics use the 1-based e-indices above.

// a_minus / b_minus are 0 for outcome + and 1 for outcome -.
constexpr int index(int block, int a_minus, int b_minus) {
  return 4 * block + 2 * a_minus + b_minus;
}

// 1-based indices of the eight independent entries, in the order used by the
// completion formulas below: (e1, e4, e5, e8, e9, e12, e14, e15).
inline constexpr std::array<int, 8> kIndependent = {1, 4, 5, 8, 9, 12, 14, 15};
// 1-based indices of the entries recovered by complete(): (e2, e3, e6, e7,
// e10, e11, e13, e16).
inline constexpr std::array<int, 8> kDependent = {2, 3, 6, 7, 10, 11, 13, 16};

// Joint table of two independent one-parameter coins per party: Alice plays +
// with probability p (first measurement) / q (second), Bob with p_ (first) /
// q_ (second).
template <class T>
std::array<T, 16> from_strategy(const T& p, const T& q, const T& p_, const T& q_) {
  const T one(1);
  auto block = [&](const T& a, const T& b, std::array<T, 16>& e, int blk) {
    e[index(blk, 0, 0)] = a * b;
    e[index(blk, 0, 1)] = a * (one - b);
    e[index(blk, 1, 0)] = (one - a) * b;
    e[index(blk, 1, 1)] = (one - a) * (one - b);
  };
  std::array<T, 16> e{};
  block(p, p_, e, 0);
  block(p, q_, e, 1);
  block(q, p_, e, 2);
  block(q, q_, e, 3);
  return e;
}

template <class T>
std::array<T, 4> block_sums(const std::array<T, 16>& e) {
  std::array<T, 4> s{};
  for (int b = 0; b < 4; ++b) s[b] = e[4 * b] + e[4 * b + 1] + e[4 * b + 2] + e[4 * b + 3];
  return s;
}

// The eight marginal-consistency residuals, LHS - RHS of:
//   e1+e2  = e5+e6     e1+e3  = e9+e11    e9+e10  = e13+e14   e5+e7  = e13+e15
//   e3+e4  = e7+e8     e11+e12= e15+e16   e2+e4   = e10+e12   e6+e8  = e14+e16
// (Alice's + marginal must agree across Bob's two settings and vice versa.)
// Residuals 4..7 follow from 0..3 plus the block normalizations.
template <class T>
std::array<T, 8> no_signaling_residuals(const std::array<T, 16>& e) {
  return {
      (e[0] + e[1]) - (e[4] + e[5]),    (e[0] + e[2]) - (e[8] + e[10]),
      (e[8] + e[9]) - (e[12] + e[13]),  (e[4] + e[6]) - (e[12] + e[14]),
      (e[2] + e[3]) - (e[6] + e[7]),    (e[10] + e[11]) - (e[14] + e[15]),
      (e[1] + e[3]) - (e[9] + e[11]),   (e[5] + e[7]) - (e[13] + e[15]),
  };
}

// Per-block correlator <AB> = e(+,+) - e(+,-) - e(-,+) + e(-,-).
template <class T>
std::array<T, 4> correlations(const std::array<T, 16>& e) {
  std::array<T, 4> c{};
  for (int b = 0; b < 4; ++b) c[b] = e[4 * b] - e[4 * b + 1] - e[4 * b + 2] + e[4 * b + 3];
  return c;
}

// CHSH combination c(D1,D1') + c(D1,D2') + c(D2,D1') - c(D2,D2').
template <class T>
T chsh_delta(const std::array<T, 16>& e) {
  auto c = correlations(e);
  return c[0] + c[1] + c[2] - c[3];
}

// Equivalent form 2*(e1+e4+e5+e8+e9+e12+e14+e15) - 4, valid once the table is
// normalized and non-signaling.
template <class T>
T chsh_delta_reduced(const std::array<T, 16>& e) {
  T s = e[0] + e[3] + e[4] + e[7] + e[8] + e[11] + e[13] + e[14];
  return T(2) * s - T(4);
}

// The independent coordinates (e1, e4, e5, e8, e9, e12, e14, e15).
template <class T>
std::array<T, 8> independent_of(const std::array<T, 16>& e) {
  std::array<T, 8> m{};
  for (int i = 0; i < 8; ++i) m[i] = e[kIndependent[i] - 1];
  return m;
}

// Signs of (m0..m7) in each dependent entry: value = (1 + sum signs*m)/2.
// Row order matches kDependent.
inline constexpr int kCompletionSign[8][8] = {
    {-1, -1, +1, -1, -1, +1, +1, -1},  // e2
    {-1, -1, -1, +1, +1, -1, -1, +1},  // e3
    {+1, -1, -1, -1, -1, +1, +1, -1},  // e6
    {-1, +1, -1, -1, +1, -1, -1, +1},  // e7
    {-1, +1, +1, -1, -1, -1, +1, -1},  // e10
    {+1, -1, -1, +1, -1, -1, -1, +1},  // e11
    {-1, +1, +1, -1, +1, -1, -1, -1},  // e13
    {+1, -1, -1, +1, -1, +1, -1, -1},  // e16
};

// Reconstructs the full table from the eight independent entries. The result
// satisfies all four block normalizations and all eight marginal-consistency
// equalities identically; entries may fall outside [0,1] when m does not
// describe a realizable table.
template <class T>
std::array<T, 16> complete(const std::array<T, 8>& m) {
  std::array<T, 16> e{};
  for (int i = 0; i < 8; ++i) e[kIndependent[i] - 1] = m[i];
  for (int d = 0; d < 8; ++d) {
    T acc(1);
    for (int i = 0; i < 8; ++i) {
      if (kCompletionSign[d][i] > 0)
        acc += m[i];
      else
        acc -= m[i];
    }
    e[kDependent[d] - 1] = acc / T(2);
  }
  return e;
}

}  // namespace qbg::table
