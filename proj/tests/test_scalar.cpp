#include "doctest.h"
#include "qbg/scalar.hpp"

using qbg::Rational;
using qbg::Scalar;

TEST_CASE("exact arithmetic stays exact") {
  Scalar third = Scalar::ratio(1, 3);
  Scalar sixth = Scalar::ratio(1, 6);
  Scalar half = third + sixth;
  CHECK(half.exact());
  CHECK(half == Scalar::ratio(1, 2));
  CHECK((third * Scalar(3)) == Scalar(1));
  CHECK((Scalar(1) - third - third - third) == Scalar(0));
  CHECK((Scalar::ratio(1, 2) / Scalar::ratio(1, 4)) == Scalar(2));
}

TEST_CASE("mixing with a measured value degrades to double") {
  Scalar mixed = Scalar::real(0.5) + Scalar::ratio(1, 2);
  CHECK(!mixed.exact());
  CHECK(mixed.to_double() == 1.0);
}

TEST_CASE("finite doubles convert to rationals exactly") {
  CHECK(Scalar::real(0.25).to_rational() == Rational(1, 4));
  CHECK(Scalar::real(0.1).to_double() == qbg::rational_to_double(Scalar::real(0.1).to_rational()));
}

TEST_CASE("division by exact zero throws") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), qbg::ValidationError);
}

TEST_CASE("non-finite values are flagged") {
  CHECK(!Scalar::real(std::nan("")).finite());
  CHECK(!Scalar::real(1.0 / 0.0).finite());
  CHECK(Scalar::ratio(-7, 3).finite());
}

TEST_CASE("comparisons") {
  CHECK(Scalar::ratio(1, 3) < Scalar::ratio(1, 2));
  CHECK(Scalar::ratio(2, 4) == Scalar::ratio(1, 2));
  CHECK(Scalar(2) > Scalar::real(1.5));
  CHECK(Scalar(1) >= Scalar(1));
}

TEST_CASE("string rendering") {
  CHECK(Scalar::ratio(3, 4).str() == "3/4");
  CHECK(Scalar::ratio(-3, 4).str() == "-3/4");
  CHECK(Scalar(2).str() == "2");
  CHECK(Scalar::real(0.5).str() == "0.5");
}

TEST_CASE("parse_rational accepts n, n/d and decimals") {
  CHECK(*qbg::parse_rational("3/4") == Rational(3, 4));
  CHECK(*qbg::parse_rational("-3/4") == Rational(-3, 4));
  CHECK(*qbg::parse_rational("2") == Rational(2));
  CHECK(*qbg::parse_rational("0.25") == Rational(1, 4));
  CHECK(*qbg::parse_rational(".5") == Rational(1, 2));
  CHECK(*qbg::parse_rational("-1.5") == Rational(-3, 2));
  CHECK(!qbg::parse_rational(""));
  CHECK(!qbg::parse_rational("abc"));
  CHECK(!qbg::parse_rational("1/0"));
  CHECK(!qbg::parse_rational("1.2.3"));
}
