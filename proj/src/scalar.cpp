#include "qbg/scalar.hpp"

#include <charconv>
#include <cstddef>

namespace qbg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    boost::multiprecision::cpp_int d{std::string(den)};
    if (d == 0) return std::nullopt;
    value = Rational(boost::multiprecision::cpp_int{std::string(num)}, d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    boost::multiprecision::cpp_int num = whole.empty()
                                             ? boost::multiprecision::cpp_int(0)
                                             : boost::multiprecision::cpp_int{std::string(whole)};
    boost::multiprecision::cpp_int den(1);
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    value = Rational(num, den);
  } else {
    if (!all_digits(text)) return std::nullopt;
    value = Rational(boost::multiprecision::cpp_int{std::string(text)});
  }
  if (negative) value = -value;
  return value;
}

std::string Scalar::str() const {
  if (exact_) return rational_to_string(rat_);
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, val_);
  return std::string(buf, res.ptr);
}

}  // namespace qbg
