#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over exact rationals.
 *
 * Coefficients are stored lowest degree first with trailing zeros stripped,
 * so the zero polynomial is the empty coefficient vector.
 */

#include <cstddef>
#include <span>
#include <vector>

#include "dualkit/rational.hpp"

namespace dualkit {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// The monomial c x^n.
  static Polynomial monomial(const Rational& c, std::size_t n);
  /// x - a.
  static Polynomial linear_root(const Rational& a);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero past the degree.
  Rational coeff(std::size_t k) const;

  Rational operator()(const Rational& x) const { return eval(x); }
  Rational eval(const Rational& x) const;

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  /// p(q(x)).
  Polynomial compose(const Polynomial& q) const;
  Polynomial pow(unsigned n) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend bool operator==(const Polynomial& p, const Polynomial& q) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Integral of p over [lo, hi].
Rational definite_integral(const Polynomial& p, const Rational& lo, const Rational& hi);

/// B(alpha, a, b) = integral_0^alpha t^(a-1) (1-t)^(b-1) dt for integers a, b >= 1.
/// Throws BadParameter otherwise.
Rational incomplete_beta(const Rational& alpha, long a, long b);

}  // namespace dualkit
