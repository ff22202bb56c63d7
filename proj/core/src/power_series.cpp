#include "dualkit/power_series.hpp"

#include <algorithm>

#include "dualkit/combinatorics.hpp"
#include "dualkit/error.hpp"

namespace dualkit {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::BadParameter, "a power series needs at least c_0");
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
  PowerSeries s = zero(order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::variable(std::size_t order) {
  PowerSeries s = zero(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

PowerSeries PowerSeries::geometric(const Rational& r, std::size_t order) {
  std::vector<Rational> c(order + 1);
  Rational p = 1;
  for (auto& x : c) {
    x = p;
    p *= r;
  }
  return PowerSeries(std::move(c));
}

const Rational& PowerSeries::coeff(std::size_t k) const {
  if (k > order()) {
    throw Error(ErrorKind::OutOfTruncation,
                "coefficient " + std::to_string(k) + " beyond order " + std::to_string(order()));
  }
  return coeffs_[k];
}

std::optional<std::size_t> PowerSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return k;
  }
  return std::nullopt;
}

PowerSeries PowerSeries::truncate(std::size_t new_order) const {
  if (new_order > order()) {
    throw Error(ErrorKind::OutOfTruncation, "cannot extend a series beyond its known order");
  }
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

PowerSeries PowerSeries::reflect() const {
  PowerSeries r = *this;
  for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
  return r;
}

PowerSeries PowerSeries::divide_by_t(std::size_t k) const {
  if (k > order()) throw Error(ErrorKind::OutOfTruncation, "divide_by_t past the known order");
  for (std::size_t i = 0; i < k; ++i) {
    if (!coeffs_[i].is_zero()) {
      throw Error(ErrorKind::ZeroConstantTerm, "series does not vanish to order " + std::to_string(k));
    }
  }
  return PowerSeries(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

PowerSeries PowerSeries::multiply_by_t(std::size_t k) const {
  PowerSeries r = zero(order());
  for (std::size_t i = 0; i + k <= order(); ++i) r.coeffs_[i + k] = coeffs_[i];
  return r;
}

PowerSeries PowerSeries::derivative() const {
  if (order() == 0) return zero(0);
  std::vector<Rational> c(order());
  for (std::size_t k = 1; k <= order(); ++k) c[k - 1] = coeffs_[k] * Rational(k);
  return PowerSeries(std::move(c));
}

bool PowerSeries::agrees_with(const PowerSeries& other) const {
  const std::size_t n = std::min(order(), other.order());
  return std::equal(coeffs_.begin(), coeffs_.begin() + n + 1, other.coeffs_.begin());
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = f.coeffs_[k] + g.coeffs_[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = f.coeffs_[k] - g.coeffs_[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  std::vector<mpq_class> acc(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const mpq_class& a = f.coeffs_[i].raw();
    if (sgn(a) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      const mpq_class& b = g.coeffs_[j].raw();
      if (sgn(b) == 0) continue;
      acc[i + j] += a * b;
    }
  }
  std::vector<Rational> c;
  c.reserve(n + 1);
  for (auto& a : acc) c.emplace_back(std::move(a));
  return PowerSeries(std::move(c));
}

PowerSeries reciprocal(const PowerSeries& f) {
  if (f[0].is_zero()) throw Error(ErrorKind::ZeroConstantTerm, "reciprocal needs c_0 != 0");
  const std::size_t n = f.order();
  const Rational inv0 = f[0].inverse();
  std::vector<Rational> g(n + 1);
  g[0] = inv0;
  for (std::size_t m = 1; m <= n; ++m) {
    mpq_class s = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      if (!f[k].is_zero() && !g[m - k].is_zero()) s += f[k].raw() * g[m - k].raw();
    }
    g[m] = -Rational(std::move(s)) * inv0;
  }
  return PowerSeries(std::move(g));
}

PowerSeries divide(const PowerSeries& num, const PowerSeries& den) {
  const auto v = den.valuation();
  if (!v) throw Error(ErrorKind::ZeroConstantTerm, "division by a series that is zero to its order");
  const std::size_t n = std::min(num.order(), den.order());
  if (*v > n) throw Error(ErrorKind::ZeroConstantTerm, "denominator vanishes past the common order");
  return num.truncate(n).divide_by_t(*v) * reciprocal(den.truncate(n).divide_by_t(*v));
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
  if (!g[0].is_zero()) {
    throw Error(ErrorKind::InnerSeriesHasConstantTerm, "inner series of a composition must have g(0) = 0");
  }
  const std::size_t n = std::min(f.order(), g.order());
  const PowerSeries inner = g.truncate(n);
  PowerSeries acc = PowerSeries::constant(f[n], n);
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * inner;
    // acc * inner has no constant term, so only c_0 receives f_k.
    acc = acc + PowerSeries::constant(f[k], n);
  }
  return acc;
}

PowerSeries compositional_inverse(const PowerSeries& h) {
  if (!h[0].is_zero() || h.order() < 1 || h[1].is_zero()) {
    throw Error(ErrorKind::NotOrderOne, "compositional inverse needs h_0 = 0 and h_1 != 0");
  }
  const std::size_t n = h.order();
  // pw[k][m] = [t^m] hbar^k, filled one degree m at a time.
  std::vector<std::vector<mpq_class>> pw(n + 1, std::vector<mpq_class>(n + 1));
  std::vector<mpq_class> b(n + 1);
  const mpq_class h1 = h[1].raw();
  b[1] = 1 / h1;
  pw[1][1] = b[1];
  for (std::size_t m = 2; m <= n; ++m) {
    mpq_class s = 0;
    for (std::size_t k = 2; k <= m; ++k) {
      mpq_class c = 0;
      for (std::size_t i = 1; i + (k - 1) <= m; ++i) {
        if (sgn(b[i]) != 0 && sgn(pw[k - 1][m - i]) != 0) c += b[i] * pw[k - 1][m - i];
      }
      pw[k][m] = c;
      if (!h[k].is_zero()) s += h[k].raw() * c;
    }
    b[m] = -s / h1;
    pw[1][m] = b[m];
  }
  std::vector<Rational> c;
  c.reserve(n + 1);
  for (auto& x : b) c.emplace_back(std::move(x));
  PowerSeries hbar(std::move(c));
  if (!(compose(h, hbar) == PowerSeries::variable(n))) {
    throw Error(ErrorKind::NotOrderOne, "compositional inverse failed to validate");
  }
  return hbar;
}

PowerSeries exp_series(const Rational& c, std::size_t order) {
  std::vector<Rational> e(order + 1);
  Rational term = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    e[k] = term;
    term *= c / Rational(k + 1);
  }
  return PowerSeries(std::move(e));
}

PowerSeries power(const PowerSeries& f, unsigned n) {
  PowerSeries result = PowerSeries::one(f.order());
  PowerSeries base = f;
  while (n != 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

}  // namespace dualkit
