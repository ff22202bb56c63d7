#include "doctest.h"

#include <random>

#include "dualkit/combinatorics.hpp"
#include "dualkit/error.hpp"
#include "dualkit/polynomial.hpp"
#include "dualkit/sequences.hpp"

using dualkit::Polynomial;
using dualkit::Rational;

namespace {

Polynomial poly(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

}  // namespace

TEST_CASE("zero polynomial is canonical") {
  CHECK(Polynomial().is_zero());
  CHECK(poly({0, 0, 0}) == Polynomial());
  CHECK(poly({0, 0, 0}).coeffs().empty());
  CHECK(Polynomial().degree() == -1);
  CHECK(poly({1, 2, 0}).degree() == 1);
  CHECK(poly({1, 1}) - poly({1, 1}) == Polynomial());
  CHECK(Polynomial().eval(Rational(17, 3)) == Rational(0));
}

TEST_CASE("evaluation") {
  CHECK(poly({Rational(-1, 2), 1})(1) == Rational(1, 2));
  CHECK(poly({0, -1, 1})(Rational(1, 2)) == Rational(-1, 4));
  CHECK(Polynomial::linear_root(3)(5) == Rational(2));
  CHECK(Polynomial::monomial(2, 3)(Rational(1, 2)) == Rational(1, 4));
  CHECK(poly({1, 2, 3}).coeff(7) == Rational(0));
}

TEST_CASE("arithmetic, calculus and composition") {
  const auto p = poly({1, 1});
  CHECK(p * p == poly({1, 2, 1}));
  CHECK(p.pow(3) == poly({1, 3, 3, 1}));
  CHECK(poly({1, 2, 3}).derivative() == poly({2, 6}));
  CHECK(poly({2, 6}).antiderivative() == poly({0, 2, 3}));
  CHECK(poly({0, 0, 1}).compose(p) == poly({1, 2, 1}));
  CHECK(-p == poly({-1, -1}));
}

TEST_CASE("definite integrals") {
  const auto beta22 = poly({0, 1}) * poly({1, -1});
  CHECK(dualkit::definite_integral(beta22, 0, 1) == Rational(1, 6));
  CHECK(dualkit::definite_integral(Polynomial::constant(1), 0, Rational(1, 2)) == Rational(1, 2));
  CHECK(dualkit::incomplete_beta(Rational(1, 2), 1, 1) == Rational(1, 2));
  CHECK(dualkit::incomplete_beta(1, 2, 2) == Rational(1, 6));
  CHECK_THROWS_AS(dualkit::incomplete_beta(1, 0, 2), dualkit::Error);
}

TEST_CASE("property: complete beta is k! l! / (k+l+1)!") {
  for (long k = 0; k <= 6; ++k) {
    for (long l = 0; l <= 6; ++l) {
      const Rational expected(dualkit::factorial(k) * dualkit::factorial(l), dualkit::factorial(k + l + 1));
      CHECK(dualkit::incomplete_beta(1, k + 1, l + 1) == expected);
    }
  }
}

TEST_CASE("property: integrals are additive over intervals") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-7, 7);
  std::uniform_int_distribution<long> den(1, 6);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rational> c(6);
    for (auto& x : c) x = Rational(num(rng), den(rng));
    const Polynomial p(c);
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    const Rational e(num(rng), den(rng));
    CHECK(dualkit::definite_integral(p, a, b) + dualkit::definite_integral(p, b, e) ==
          dualkit::definite_integral(p, a, e));
    CHECK(p.antiderivative().derivative() == p);
  }
}
