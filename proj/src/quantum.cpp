#include "qbg/quantum.hpp"

#include <cmath>

#include "qbg/errors.hpp"

namespace qbg {

namespace {

using Complex = std::complex<double>;
using Amp = std::array<Complex, 4>;
using Mat2 = std::array<std::array<double, 2>, 2>;

// cos(t) Z + sin(t) X.
Mat2 observable(double theta) {
  double c = std::cos(theta), s = std::sin(theta);
  return {{{c, s}, {s, -c}}};
}

// Projector onto the sign-s eigenspace of observable(theta).
Mat2 projector(double theta, int s) {
  double c = std::cos(theta), sn = std::sin(theta);
  double sign = s >= 0 ? 1.0 : -1.0;
  return {{{(1.0 + sign * c) / 2.0, sign * sn / 2.0},
           {sign * sn / 2.0, (1.0 - sign * c) / 2.0}}};
}

// (M x I) psi for party == 0, (I x M) psi for party == 1.
Amp apply_one(const Mat2& m, const Amp& psi, int party) {
  Amp out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < 2; ++k)
        acc += party == 0 ? m[i][k] * psi[2 * k + j] : m[j][k] * psi[2 * i + k];
      out[2 * i + j] = acc;
    }
  return out;
}

double inner_real(const Amp& a, const Amp& b) {
  Complex acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += std::conj(a[i]) * b[i];
  return acc.real();
}

void require_finite_angles(const MeasurementSettings& m) {
  for (double t : {m.a1, m.a2, m.b1, m.b2})
    if (!std::isfinite(t)) throw ValidationError("measurement angle is not finite");
}

}  // namespace

QuantumState::QuantumState(const std::array<Complex, 4>& amp) : amp_(amp) {
  double norm2 = 0.0;
  for (const Complex& a : amp_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw ValidationError("state amplitude is not finite");
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > 1e-12)
    throw ValidationError("state is not normalized (|amp|^2 = " + std::to_string(norm2) + ")");
}

QuantumState bell_state() {
  const double r = 1.0 / std::sqrt(2.0);
  return QuantumState({Complex(r), Complex(0.0), Complex(0.0), Complex(r)});
}

MeasurementSettings canonical_settings() {
  const double pi = std::acos(-1.0);
  return {0.0, pi / 2.0, pi / 4.0, -pi / 4.0};
}

double correlation(const QuantumState& psi, double theta_a, double theta_b) {
  if (!std::isfinite(theta_a) || !std::isfinite(theta_b))
    throw ValidationError("measurement angle is not finite");
  Amp v = apply_one(observable(theta_a), psi.amp(), 0);
  v = apply_one(observable(theta_b), v, 1);
  return inner_real(psi.amp(), v);
}

JointDistribution epr_distribution(const QuantumState& psi, const MeasurementSettings& m) {
  require_finite_angles(m);
  const double a_angle[2] = {m.a1, m.a2};
  const double b_angle[2] = {m.b1, m.b2};
  std::array<double, 16> eps{};
  for (int as = 0; as < 2; ++as)
    for (int bs = 0; bs < 2; ++bs)
      for (int am = 0; am < 2; ++am)
        for (int bm = 0; bm < 2; ++bm) {
          Amp v = apply_one(projector(a_angle[as], am == 0 ? +1 : -1), psi.amp(), 0);
          v = apply_one(projector(b_angle[bs], bm == 0 ? +1 : -1), v, 1);
          double p = inner_real(psi.amp(), v);
          eps[table::index(2 * as + bs, am, bm)] = p;
        }
  // Rounding can push an expectation value a few ulp outside [0,1]; the
  // JointDistribution constructor clamps such entries onto the interval.
  return JointDistribution(eps);
}

QuantumState random_state(Rng& rng) {
  auto gaussian = [&rng]() {
    double u = 1.0 - rng.uniform();  // (0, 1], keeps log finite
    double v = rng.uniform();
    double r = std::sqrt(-2.0 * std::log(u));
    const double two_pi = 2.0 * std::acos(-1.0);
    return Complex(r * std::cos(two_pi * v), r * std::sin(two_pi * v));
  };
  while (true) {
    Amp amp;
    double norm2 = 0.0;
    for (Complex& a : amp) {
      a = gaussian();
      norm2 += std::norm(a);
    }
    if (norm2 < 1e-12) continue;
    double inv = 1.0 / std::sqrt(norm2);
    for (Complex& a : amp) a *= inv;
    // Renormalize exactly enough for the constructor's 1e-12 gate.
    double check = 0.0;
    for (const Complex& a : amp) check += std::norm(a);
    if (std::abs(check - 1.0) > 1e-13) {
      double fix = 1.0 / std::sqrt(check);
      for (Complex& a : amp) a *= fix;
    }
    return QuantumState(amp);
  }
}

MeasurementSettings random_settings(Rng& rng) {
  const double two_pi = 2.0 * std::acos(-1.0);
  return {rng.uniform(0.0, two_pi), rng.uniform(0.0, two_pi), rng.uniform(0.0, two_pi),
          rng.uniform(0.0, two_pi)};
}

}  // namespace qbg
