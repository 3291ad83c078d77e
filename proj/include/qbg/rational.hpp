#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "qbg/errors.hpp"

namespace qbg {

// Arbitrary-precision rational. All "exact" claims in this library bottom out
// in arithmetic on this type.
using Rational = boost::multiprecision::cpp_rational;

// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw ValidationError("cannot convert non-finite value to rational");
  return Rational(v);
}

inline double rational_to_double(const Rational& r) { return static_cast<double>(r); }

// "3/4", or just "3" when the denominator is 1.
inline std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// Accepts "n", "n/d" and plain decimals such as "0.25" (parsed exactly).
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace qbg
