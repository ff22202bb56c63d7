#include "doctest.h"

#include <random>

#include "dualkit/error.hpp"
#include "dualkit/power_series.hpp"
#include "dualkit/sequences.hpp"

using dualkit::PowerSeries;
using dualkit::Rational;

namespace {

PowerSeries series(std::initializer_list<Rational> c) { return PowerSeries(std::vector<Rational>(c)); }

PowerSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit, bool order_one) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Rational> c(order + 1);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  if (order_one) {
    c[0] = 0;
    if (c[1].is_zero()) c[1] = 1;
  } else if (unit && c[0].is_zero()) {
    c[0] = 1;
  }
  return PowerSeries(c);
}

}  // namespace

TEST_CASE("construction keeps order + 1 coefficients") {
  const PowerSeries f({1, 2}, 4);
  CHECK(f.order() == 4);
  CHECK(f.coeffs().size() == 5);
  CHECK(f[3] == Rational(0));
  CHECK_THROWS_AS(f.coeff(5), dualkit::Error);
  CHECK_THROWS_AS(PowerSeries(std::vector<Rational>{}), dualkit::Error);
  CHECK(PowerSeries({1, 2, 3, 4}, 1) == series({1, 2}));
}

TEST_CASE("valuation") {
  CHECK(series({0, 0, 3}).valuation() == 2u);
  CHECK_FALSE(PowerSeries::zero(5).valuation().has_value());
  CHECK(PowerSeries::zero(5).is_zero());
}

TEST_CASE("addition") {
  const auto f = series({1, 1, 0, 0});
  const auto g = series({1, -1, 0, 0});
  CHECK(f + g == series({2, 0, 0, 0}));
  CHECK(f + PowerSeries::zero(3) == f);
  // t/(e^t - 1) + t/2 kills the t^1 coefficient
  const auto b = dualkit::bernoulli_numbers(6);
  std::vector<Rational> egf;
  Rational fact = 1;
  for (std::size_t n = 0; n <= 6; ++n) {
    if (n > 0) fact *= Rational(static_cast<long>(n));
    egf.push_back(b[n] / fact);
  }
  const auto sum = PowerSeries(egf) + series({0, Rational(1, 2), 0, 0, 0, 0, 0});
  CHECK(sum[1] == Rational(0));
}

TEST_CASE("truncation to the smaller order") {
  const auto f = PowerSeries::geometric(1, 7);
  const auto g = PowerSeries::geometric(2, 3);
  CHECK((f + g).order() == 3);
  CHECK((f * g).order() == 3);
}

TEST_CASE("multiplication") {
  CHECK(series({1, 1, 0}) * series({1, -1, 0}) == series({1, 0, -1}));
  const auto f = PowerSeries::geometric(Rational(1, 3), 6);
  CHECK(f * PowerSeries::one(6) == f);
  const auto e = dualkit::exp_series(1, 4);
  CHECK((e * e)[2] == Rational(2));
}

TEST_CASE("reciprocal") {
  CHECK(reciprocal(series({1, -1, 0, 0, 0})) == PowerSeries::geometric(1, 4));
  CHECK(reciprocal(dualkit::exp_series(1, 5))[2] == Rational(1, 2));
  CHECK(reciprocal(PowerSeries::constant(2, 3)) == PowerSeries::constant(Rational(1, 2), 3));
  CHECK_THROWS_AS(reciprocal(series({0, 1, 2})), dualkit::Error);
}

TEST_CASE("divide cancels a removable singularity") {
  // (e^t - 1)/t divided into t: the Bernoulli egf
  auto e = dualkit::exp_series(1, 8) - PowerSeries::one(8);
  const auto q = divide(PowerSeries::variable(8), e);
  CHECK(q[0] == Rational(1));
  CHECK(q[1] == Rational(-1, 2));
  CHECK(q[2] == Rational(1, 12));
  CHECK_THROWS_AS(divide(PowerSeries::one(4), PowerSeries::variable(4)), dualkit::Error);
  CHECK_THROWS_AS(divide(PowerSeries::one(4), PowerSeries::zero(4)), dualkit::Error);
}

TEST_CASE("composition") {
  const auto f = PowerSeries::geometric(1, 6);
  const auto g = PowerSeries::geometric(1, 6).multiply_by_t();  // t/(1-t)
  // 1/(1 - t/(1-t)) = (1-t)/(1-2t)
  CHECK(compose(f, g) == PowerSeries(std::vector<Rational>{1, 1, 2, 4, 8, 16, 32}));
  CHECK(compose(f, PowerSeries::variable(6)) == f);
  CHECK_THROWS_AS(compose(f, f), dualkit::Error);

  // 1/(1 - x/2) composed with x/(x-1) = (1-x) / (1 - x/2)
  const std::size_t n = 20;
  const auto a = PowerSeries::geometric(Rational(1, 2), n);
  const auto inner = -PowerSeries::geometric(1, n).multiply_by_t();
  const auto lhs = compose(a, inner);
  PowerSeries one_minus_x({1, -1}, n);
  CHECK(lhs == one_minus_x * a);
}

TEST_CASE("compositional inverse") {
  const auto h = PowerSeries::geometric(1, 8).multiply_by_t();
  const auto hbar = compositional_inverse(h);
  CHECK(hbar == PowerSeries::geometric(-1, 8).multiply_by_t());
  CHECK(compositional_inverse(PowerSeries::variable(5)) == PowerSeries::variable(5));

  const auto c = compositional_inverse(PowerSeries({0, 1, -1}, 8));
  const std::vector<long> catalan = {0, 1, 1, 2, 5, 14, 42, 132, 429};
  for (std::size_t k = 0; k < catalan.size(); ++k) CHECK(c[k] == Rational(catalan[k]));

  CHECK_THROWS_AS(compositional_inverse(series({1, 1, 0})), dualkit::Error);
  CHECK_THROWS_AS(compositional_inverse(series({0, 0, 1})), dualkit::Error);
}

TEST_CASE("exp series") {
  CHECK(dualkit::exp_series(0, 5) == PowerSeries::one(5));
  CHECK(dualkit::exp_series(1, 5)[3] == Rational(1, 6));
  CHECK(dualkit::exp_series(Rational(1, 2), 5)[2] == Rational(1, 8));
}

TEST_CASE("derivative, reflect and shifts") {
  const auto f = series({1, 2, 3, 4});
  CHECK(f.derivative() == series({2, 6, 12}));
  CHECK(f.reflect() == series({1, -2, 3, -4}));
  CHECK(f.multiply_by_t() == series({0, 1, 2, 3}));
  CHECK(series({0, 0, 5, 6}).divide_by_t(2) == series({5, 6}));
  CHECK_THROWS_AS(f.divide_by_t(), dualkit::Error);
  CHECK(dualkit::power(series({1, 1, 0, 0}), 3) == series({1, 3, 3, 1}));
}

TEST_CASE("property: reciprocal inverts units") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_series(rng, 12, true, false);
    CHECK(f * reciprocal(f) == PowerSeries::one(12));
  }
}

TEST_CASE("property: compositional inverse is two-sided") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = random_series(rng, 10, false, true);
    const auto hbar = compositional_inverse(h);
    CHECK(compose(h, hbar) == PowerSeries::variable(10));
    CHECK(compose(hbar, h) == PowerSeries::variable(10));
  }
}

TEST_CASE("property: ring laws up to truncation") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_series(rng, 9, false, false);
    const auto g = random_series(rng, 9, false, false);
    const auto h = random_series(rng, 9, false, false);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    const auto p = random_series(rng, 9, false, true);
    const auto q = random_series(rng, 9, false, true);
    CHECK(compose(compose(f, p), q) == compose(f, compose(p, q)));
  }
}

TEST_CASE("property: exp(a) exp(b) = exp(a + b)") {
  const std::vector<Rational> vals = {0, 1, -1, Rational(1, 2), Rational(-2, 3), Rational(5, 7)};
  for (const auto& a : vals) {
    for (const auto& b : vals) {
      CHECK(dualkit::exp_series(a, 15) * dualkit::exp_series(b, 15) == dualkit::exp_series(a + b, 15));
    }
  }
}
