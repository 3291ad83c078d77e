#pragma once

// Test-side oracles. Each one recomputes a quantity by a route that shares no
// code with the library implementation it cross-checks.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

#include "qbg/game.hpp"

namespace oracle {

// +1 eigenvector of cos(t)Z + sin(t)X is (cos(t/2), sin(t/2)); the -1
// eigenvector is (-sin(t/2), cos(t/2)). Joint outcome probabilities follow
// from squared amplitudes instead of projector algebra.
inline std::array<std::complex<double>, 2> eigvec(double theta, int sign) {
  double h = theta / 2.0;
  if (sign > 0) return {std::cos(h), std::sin(h)};
  return {-std::sin(h), std::cos(h)};
}

inline double joint_prob(const std::array<std::complex<double>, 4>& psi, double ta, int sa,
                         double tb, int sb) {
  auto va = eigvec(ta, sa);
  auto vb = eigvec(tb, sb);
  std::complex<double> amp = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) amp += std::conj(va[i] * vb[j]) * psi[2 * i + j];
  return std::norm(amp);
}

// Full 16-entry table in the standard block layout.
inline std::array<double, 16> epr_table(const std::array<std::complex<double>, 4>& psi, double a1,
                                        double a2, double b1, double b2) {
  const double aa[2] = {a1, a2}, bb[2] = {b1, b2};
  std::array<double, 16> e{};
  int k = 0;
  for (int as = 0; as < 2; ++as)
    for (int bs = 0; bs < 2; ++bs)
      for (int sa : {+1, -1})
        for (int sb : {+1, -1}) e[k++] = joint_prob(psi, aa[as], sa, bb[bs], sb);
  return e;
}

// Per-type payoffs as a direct expectation: conditional type weight times
// per-outcome payoff times outcome probability, all in explicit loops.
inline std::array<double, 4> type_payoffs_bruteforce(const qbg::GameSpec& g,
                                                     const std::array<double, 16>& table) {
  double prior[2][2];
  for (int at = 0; at < 2; ++at)
    for (int bt = 0; bt < 2; ++bt) prior[at][bt] = g.prior[at][bt].to_double();
  std::array<double, 4> pi{};
  for (int at = 0; at < 2; ++at)
    for (int bt = 0; bt < 2; ++bt) {
      double row = prior[at][0] + prior[at][1];
      double col = prior[0][bt] + prior[1][bt];
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          double pr = table[(2 * at + bt) * 4 + 2 * i + j];
          if (row > 0)
            pi[at] += prior[at][bt] / row * g.blocks[at][bt].alice[i][j].to_double() * pr;
          if (col > 0)
            pi[2 + bt] += prior[at][bt] / col * g.blocks[at][bt].bob[i][j].to_double() * pr;
        }
    }
  return pi;
}

// Product table of a behavioral strategy, from plain products.
inline std::array<double, 16> strategy_table(double p, double q, double p_, double q_) {
  auto blk = [](double a, double b, double* e) {
    e[0] = a * b;
    e[1] = a * (1 - b);
    e[2] = (1 - a) * b;
    e[3] = (1 - a) * (1 - b);
  };
  std::array<double, 16> e{};
  blk(p, p_, &e[0]);
  blk(p, q_, &e[4]);
  blk(q, p_, &e[8]);
  blk(q, q_, &e[12]);
  return e;
}

// The eight dependent entries written out literally, term by term.
inline std::array<double, 16> complete_literal(const std::array<double, 8>& m) {
  double e1 = m[0], e4 = m[1], e5 = m[2], e8 = m[3];
  double e9 = m[4], e12 = m[5], e14 = m[6], e15 = m[7];
  std::array<double, 16> e{};
  e[0] = e1;
  e[3] = e4;
  e[4] = e5;
  e[7] = e8;
  e[8] = e9;
  e[11] = e12;
  e[13] = e14;
  e[14] = e15;
  e[1] = (1 - e1 - e4 + e5 - e8 - e9 + e12 + e14 - e15) / 2;   // e2
  e[2] = (1 - e1 - e4 - e5 + e8 + e9 - e12 - e14 + e15) / 2;   // e3
  e[5] = (1 + e1 - e4 - e5 - e8 - e9 + e12 + e14 - e15) / 2;   // e6
  e[6] = (1 - e1 + e4 - e5 - e8 + e9 - e12 - e14 + e15) / 2;   // e7
  e[9] = (1 - e1 + e4 + e5 - e8 - e9 - e12 + e14 - e15) / 2;   // e10
  e[10] = (1 + e1 - e4 - e5 + e8 - e9 - e12 - e14 + e15) / 2;  // e11
  e[12] = (1 - e1 + e4 + e5 - e8 + e9 - e12 - e14 - e15) / 2;  // e13
  e[15] = (1 + e1 - e4 - e5 + e8 - e9 + e12 - e14 - e15) / 2;  // e16
  return e;
}

// splitmix64: independent random stream for sampler cross-checks.
struct SplitMix64 {
  std::uint64_t s;
  explicit SplitMix64(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }
};

// Rejection sampler over the independent coordinates using the literal
// completion; shares nothing with the library sampler but targets the same
// distribution.
inline std::array<double, 16> sample_ns_table(SplitMix64& rng) {
  while (true) {
    std::array<double, 8> m;
    for (double& x : m) x = rng.uniform();
    auto e = complete_literal(m);
    bool ok = true;
    for (double v : e)
      if (v < 0.0 || v > 1.0) {
        ok = false;
        break;
      }
    if (ok) return e;
  }
}

}  // namespace oracle
