#include "dualkit/polynomial.hpp"

#include <algorithm>

#include "dualkit/error.hpp"

namespace dualkit {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t n) {
  std::vector<Rational> v(n + 1);
  v[n] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& a) { return Polynomial({-a, 1}); }

Rational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Polynomial::eval(const Rational& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x.raw();
    acc += it->raw();
  }
  return Rational(std::move(acc));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * Rational(k);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> v(coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k + 1] = coeffs_[k] / Rational(k + 1);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::compose(const Polynomial& q) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q;
    acc += constant(*it);
  }
  return acc;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (n != 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<mpq_class> acc(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) acc[i + j] += p.coeffs_[i].raw() * q.coeffs_[j].raw();
  }
  std::vector<Rational> c;
  c.reserve(acc.size());
  for (auto& a : acc) c.emplace_back(std::move(a));
  return Polynomial(std::move(c));
}

Rational definite_integral(const Polynomial& p, const Rational& lo, const Rational& hi) {
  const Polynomial anti = p.antiderivative();
  return anti(hi) - anti(lo);
}

Rational incomplete_beta(const Rational& alpha, long a, long b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::BadParameter, "incomplete beta needs integer a, b >= 1");
  const Polynomial integrand = Polynomial::monomial(1, static_cast<std::size_t>(a - 1)) *
                               Polynomial({1, -1}).pow(static_cast<unsigned>(b - 1));
  return definite_integral(integrand, 0, alpha);
}

}  // namespace dualkit
