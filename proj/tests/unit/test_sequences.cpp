#include "doctest.h"

#include <algorithm>
#include <string>

#include "dualkit/combinatorics.hpp"
#include "dualkit/error.hpp"
#include "dualkit/power_series.hpp"
#include "dualkit/sequences.hpp"

using dualkit::Corpus;
using dualkit::Polynomial;
using dualkit::PowerSeries;
using dualkit::Rational;

namespace {

std::vector<Rational> q(std::initializer_list<Rational> c) { return std::vector<Rational>(c); }

}  // namespace

TEST_CASE("Bernoulli numbers") {
  const auto b = dualkit::bernoulli_numbers(4);
  CHECK(b.values == q({1, Rational(-1, 2), Rational(1, 6), 0, Rational(-1, 30)}));
  const auto big = dualkit::bernoulli_numbers(40);
  for (std::size_t n = 3; n <= 40; n += 2) CHECK(big[n].is_zero());
  CHECK(big.values == dualkit::bernoulli_numbers_recurrence(40).values);
  CHECK(big[20] == Rational(mpz_class("-174611"), mpz_class(330)));
}

TEST_CASE("Bernoulli polynomials") {
  CHECK(dualkit::bernoulli_poly(0) == Polynomial::constant(1));
  CHECK(dualkit::bernoulli_poly(1) == Polynomial(q({Rational(-1, 2), 1})));
  CHECK(dualkit::bernoulli_poly(2)(1) == Rational(1, 6));
  const auto b = dualkit::bernoulli_numbers(16);
  for (std::size_t n = 0; n <= 16; ++n) {
    const auto p = dualkit::bernoulli_poly(n);
    CHECK(p.degree() == static_cast<long>(n));
    CHECK(p.coeff(n) == Rational(1));
    CHECK(p(1) == Rational(dualkit::sign_pow(static_cast<long>(n))) * b[n]);
  }
}

TEST_CASE("Euler polynomials and numbers") {
  CHECK(dualkit::euler_poly(0) == Polynomial::constant(1));
  CHECK(dualkit::euler_poly(2) == Polynomial(q({0, -1, 1})));
  CHECK(dualkit::euler_numbers(4).values == q({1, 0, -1, 0, 5}));
  const auto e = dualkit::euler_numbers(30);
  for (std::size_t n = 1; n <= 30; n += 2) CHECK(e[n].is_zero());
  for (const auto& v : e.values) CHECK(v.is_integer());
  // (-1)^n E_n(-x) = -E_n(x) + 2 x^n
  const Polynomial minus_x(q({0, -1}));
  for (std::size_t n = 0; n <= 12; ++n) {
    const auto en = dualkit::euler_poly(n);
    CHECK(en.compose(minus_x) * Rational(dualkit::sign_pow(static_cast<long>(n))) ==
          -en + Polynomial::monomial(2, n));
  }
}

TEST_CASE("Euler polynomials from the half-point expansion") {
  const auto e = dualkit::euler_numbers(20);
  const Polynomial shift(q({Rational(-1, 2), 1}));
  for (std::size_t n = 0; n <= 20; ++n) {
    Polynomial sum;
    for (std::size_t k = 0; k <= n; ++k) {
      sum += dualkit::binomial(static_cast<long>(n), static_cast<long>(k)) * e[k] /
             Rational(2).pow(static_cast<long>(k)) * shift.pow(static_cast<unsigned>(n - k));
    }
    CHECK(sum == dualkit::euler_poly(n));
  }
}

TEST_CASE("Euler polynomials match the generating function at fixed x") {
  const std::size_t n = 14;
  for (const Rational& x : {Rational(0), Rational(1, 3), Rational(-2)}) {
    const auto den = dualkit::exp_series(1, n) + PowerSeries::one(n);
    const auto gf = dualkit::exp_series(x, n) * reciprocal(den) * Rational(2);
    Rational fact = 1;
    for (std::size_t m = 0; m <= n; ++m) {
      if (m > 0) fact *= Rational(static_cast<long>(m));
      CHECK(gf[m] * fact == dualkit::euler_poly(m)(x));
    }
  }
}

TEST_CASE("conjugate Bernoulli polynomials match the printed list") {
  const std::vector<std::vector<Rational>> printed = {
      {1},
      {Rational(1, 2), 1},
      {Rational(5, 6), 1, 1},
      {2, Rational(5, 2), Rational(3, 2), 1},
      {Rational(191, 30), 8, 5, 2, 1},
      {Rational(76, 3), Rational(191, 6), 20, Rational(25, 3), Rational(5, 2), 1},
  };
  for (std::size_t n = 0; n < printed.size(); ++n) {
    CAPTURE(n);
    CHECK(dualkit::conjugate_bernoulli_poly(n) == Polynomial(printed[n]));
  }
}

TEST_CASE("conjugate Bernoulli polynomials match the generating function at fixed x") {
  const std::size_t n = 20;
  const auto numbers = dualkit::conjugate_bernoulli_numbers(n);
  // e^{xt} t / (1 + 2t - e^t)
  auto den = PowerSeries::one(n + 1) + PowerSeries::variable(n + 1) * Rational(2) - dualkit::exp_series(1, n + 1);
  const auto base = divide(PowerSeries::variable(n + 1), den);
  for (const Rational& x : {Rational(0), Rational(1), Rational(-3, 4)}) {
    const auto gf = dualkit::exp_series(x, n) * base.truncate(n);
    Rational fact = 1;
    for (std::size_t m = 0; m <= n; ++m) {
      if (m > 0) fact *= Rational(static_cast<long>(m));
      CHECK(gf[m] * fact == dualkit::conjugate_bernoulli_poly(m)(x));
    }
  }
  CHECK(numbers[1] == Rational(1, 2));
  CHECK(numbers[4] == Rational(191, 30));
}

TEST_CASE("corpus") {
  CHECK(dualkit::corpus(Corpus::Lucas, 5).values == q({2, 1, 3, 4, 7, 11}));
  CHECK(dualkit::corpus(Corpus::InvBinom, 3, 1).values == q({1, Rational(1, 2), Rational(1, 3), Rational(1, 4)}));
  CHECK(dualkit::corpus(Corpus::InvBinom, 2, 2).values == q({Rational(1, 3), Rational(1, 6), Rational(1, 10)}));
  CHECK(dualkit::corpus(Corpus::Harmonic, 3).values == q({0, 1, Rational(3, 2), Rational(11, 6)}));
  CHECK(dualkit::corpus(Corpus::NFib, 5).values == q({0, 0, 2, 3, 8, 15}));
  CHECK(dualkit::corpus(Corpus::PowHalf, 3).values == q({1, Rational(1, 2), Rational(1, 4), Rational(1, 8)}));
  CHECK(dualkit::corpus(Corpus::SignedBernoulli, 3).values == q({1, Rational(1, 2), Rational(1, 6), 0}));
  CHECK_THROWS_AS(dualkit::corpus(Corpus::InvBinom, 3, 0), dualkit::Error);
}

TEST_CASE("property: regeneration is prefix stable") {
  for (const auto& name : dualkit::sequence_names()) {
    if (name.find('<') != std::string::npos) continue;
    CAPTURE(name);
    const auto small = dualkit::sequence_by_name(name, 10);
    const auto large = dualkit::sequence_by_name(name, 25);
    REQUIRE(small.values.size() == 11);
    REQUIRE(large.values.size() == 26);
    CHECK(std::equal(small.values.begin(), small.values.end(), large.values.begin()));
  }
  for (const auto& name : dualkit::family_names()) {
    CAPTURE(name);
    const auto small = dualkit::family_by_name(name, 8);
    const auto large = dualkit::family_by_name(name, 14);
    CHECK(std::equal(small.polys.begin(), small.polys.end(), large.polys.begin()));
    for (std::size_t n = 0; n < large.polys.size(); ++n) {
      CHECK(large.polys[n].degree() == static_cast<long>(n));
      CHECK(large.polys[n].coeff(n) == Rational(1));
    }
  }
}

TEST_CASE("registry") {
  CHECK(dualkit::sequence_by_name("inv-binom-3", 2).values == q({Rational(1, 10), Rational(1, 20), Rational(1, 35)}));
  CHECK_THROWS_AS(dualkit::sequence_by_name("catalan", 3), dualkit::Error);
  CHECK_THROWS_AS(dualkit::sequence_by_name("inv-binom-0", 3), dualkit::Error);
  CHECK_THROWS_AS(dualkit::family_by_name("legendre", 3), dualkit::Error);
}
