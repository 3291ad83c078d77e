#pragma once

#include <array>
#include <complex>

#include "qbg/distribution.hpp"
#include "qbg/rng.hpp"

namespace qbg {

// Two-qubit pure state. Amplitudes are indexed in the computational basis as
// (|00>, |01>, |10>, |11>), first qubit Alice's, second Bob's.
class QuantumState {
 public:
  // Throws ValidationError unless the amplitudes are finite with unit norm
  // (within 1e-12).
  explicit QuantumState(const std::array<std::complex<double>, 4>& amp);

  const std::array<std::complex<double>, 4>& amp() const { return amp_; }

 private:
  std::array<std::complex<double>, 4> amp_;
};

// (|00> + |11>) / sqrt(2), the maximally entangled state used throughout.
QuantumState bell_state();

// Measurement directions in radians: Alice chooses between a1/a2, Bob
// between b1/b2. Each angle t selects the +-1-valued observable
// cos(t) Z + sin(t) X, whose +1 eigenvector is (cos(t/2), sin(t/2)).
struct MeasurementSettings {
  double a1, a2, b1, b2;
};

// The angles realizing the maximal CHSH violation for bell_state():
// (0, pi/2, pi/4, -pi/4).
MeasurementSettings canonical_settings();

// <A(theta_a) x A(theta_b)> for the given state. For bell_state() this
// equals cos(theta_a - theta_b).
double correlation(const QuantumState& psi, double theta_a, double theta_b);

// Joint outcome table of the four setting pairs (a1b1, a1b2, a2b1, a2b2),
// computed from projector expectation values. Always normalized and
// non-signaling up to rounding; entries are clamped onto [0,1].
JointDistribution epr_distribution(const QuantumState& psi, const MeasurementSettings& m);

// Haar-like random pure state (normalized complex Gaussian amplitudes).
QuantumState random_state(Rng& rng);

// Four independent angles uniform on [0, 2*pi).
MeasurementSettings random_settings(Rng& rng);

}  // namespace qbg
