#pragma once

#include <string>

#include "qbg/rational.hpp"

namespace qbg {

// Number that is either an exact rational or a plain double. Exact values
// stay exact under +,-,*,/ with other exact values; any operation touching an
// inexact operand produces an inexact result. Game inputs are stored as
// Scalars so that integer/rational payoff tables flow through the normal form
// and the LP without rounding, while measured (floating) inputs degrade
// gracefully to double arithmetic.
class Scalar {
 public:
  Scalar() : exact_(true), rat_(0), val_(0.0) {}
  Scalar(int v) : exact_(true), rat_(v), val_(static_cast<double>(v)) {}
  Scalar(const Rational& r) : exact_(true), rat_(r), val_(rational_to_double(r)) {}

  // Inexact constructor. Intentionally not implicit: a double literal must be
  // marked as measured data at the call site.
  static Scalar real(double v) {
    Scalar s;
    s.exact_ = false;
    s.rat_ = 0;
    s.val_ = v;
    return s;
  }
  static Scalar ratio(long num, long den) { return Scalar(Rational(num, den)); }

  bool exact() const { return exact_; }
  bool finite() const { return exact_ || std::isfinite(val_); }

  double to_double() const { return val_; }
  // Exact for both branches: a finite double converts to its dyadic rational.
  Rational to_rational() const { return exact_ ? rat_ : rational_from_double(val_); }

  // "3/4" for exact values, shortest round-trip decimal otherwise.
  std::string str() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(a.rat_ + b.rat_);
    return real(a.val_ + b.val_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(a.rat_ - b.rat_);
    return real(a.val_ - b.val_);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(a.rat_ * b.rat_);
    return real(a.val_ * b.val_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) {
      if (b.rat_ == 0) throw ValidationError("exact division by zero");
      return Scalar(a.rat_ / b.rat_);
    }
    return real(a.val_ / b.val_);
  }
  Scalar operator-() const { return exact_ ? Scalar(Rational(-rat_)) : real(-val_); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  // Exact pairs compare as rationals, anything else as doubles.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return a.rat_ == b.rat_;
    return a.val_ == b.val_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return a.rat_ < b.rat_;
    return a.val_ < b.val_;
  }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

 private:
  bool exact_;
  Rational rat_;
  double val_;
};

}  // namespace qbg
