#pragma once

#include <cstdint>
#include <random>

namespace qbg {

// Deterministic random source. The uniform() mapping is spelled out (rather
// than using std::uniform_real_distribution, whose output is implementation
// defined) so that seeded runs produce identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform on [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace qbg
