#include "doctest.h"

#include "dualkit/combinatorics.hpp"
#include "dualkit/error.hpp"
#include "dualkit/rational.hpp"

using dualkit::Rational;

TEST_CASE("rationals are stored reduced with a positive denominator") {
  const Rational r(6, -4);
  CHECK(r.str() == "-3/2");
  CHECK(r.denominator() == 2);
  CHECK(Rational(10, 5).str() == "2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(0, 7) == Rational(0));
}

TEST_CASE("parse round-trips canonical strings") {
  for (const char* s : {"0", "1", "-1", "191/30", "-76/3", "123456789012345678901234567891/2"}) {
    CHECK(Rational::parse(s).str() == s);
  }
  CHECK(Rational::parse(" 4/6 ").str() == "2/3");
  CHECK(Rational::parse("+5").str() == "5");
  CHECK(Rational::parse("-2/4").str() == "-1/2");
}

TEST_CASE("parse rejects malformed input") {
  for (const char* s : {"", "1/", "/2", "a", "1/-2", "1.5", "1/0"}) {
    CAPTURE(s);
    CHECK_THROWS_AS(Rational::parse(s), dualkit::Error);
  }
  try {
    (void)Rational::parse("x");
  } catch (const dualkit::Error& e) {
    CHECK(e.kind() == dualkit::ErrorKind::ParseError);
  }
}

TEST_CASE("arithmetic is exact") {
  const Rational a(1, 3);
  const Rational b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK(Rational(-5, 2).abs() == Rational(5, 2));
  CHECK(Rational(3, 7).inverse() == Rational(7, 3));
}

TEST_CASE("division by zero raises") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), dualkit::Error);
  CHECK_THROWS_AS(Rational(0).inverse(), dualkit::Error);
  CHECK_THROWS_AS(Rational(1, 0), dualkit::Error);
}

TEST_CASE("ordering is total") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(1).sign() == 1);
  CHECK(Rational(-1, 9).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("binomial coefficients") {
  using dualkit::binomial;
  CHECK(binomial(5, 2) == Rational(10));
  for (long n = -4; n <= 6; ++n) CHECK(binomial(n, 0) == Rational(1));
  CHECK(binomial(-2, 3) == Rational(-4));
  CHECK(binomial(3, 5) == Rational(0));
  CHECK(binomial(Rational(-2), 3) == Rational(-4));
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK_THROWS_AS(binomial(4, -1), dualkit::Error);
  CHECK_THROWS_AS(binomial(Rational(4), -1), dualkit::Error);
  // C(-k-1, j) = (-1)^j C(k+j, j)
  for (long k = 0; k < 6; ++k) {
    for (long j = 0; j < 6; ++j) {
      CHECK(binomial(-k - 1, j) == Rational(dualkit::sign_pow(j)) * binomial(k + j, j));
    }
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(dualkit::harmonic(0) == Rational(0));
  CHECK(dualkit::harmonic(3) == Rational(11, 6));
  CHECK(dualkit::factorial(5) == 120);
}
