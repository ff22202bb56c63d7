#pragma once

/**
 * @file power_series.hpp
 * @brief Truncated formal power series over exact rationals.
 *
 * A PowerSeries of order N stores c_0..c_N and stands for the class of
 * every series agreeing with it up to t^N. Binary operations truncate to the
 * smaller order of their operands, so precision is never silently claimed.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dualkit/rational.hpp"

namespace dualkit {

class PowerSeries {
 public:
  /// The zero series of order 0.
  PowerSeries() : coeffs_(1) {}

  /// Order is coeffs.size() - 1. An empty vector is rejected.
  explicit PowerSeries(std::vector<Rational> coeffs);

  /// Pads with zeros or truncates so that exactly order+1 coefficients remain.
  PowerSeries(std::vector<Rational> coeffs, std::size_t order);

  static PowerSeries zero(std::size_t order) { return PowerSeries(std::vector<Rational>(order + 1)); }
  static PowerSeries constant(const Rational& c, std::size_t order);
  static PowerSeries one(std::size_t order) { return constant(1, order); }
  /// The series t.
  static PowerSeries variable(std::size_t order);
  /// 1/(1 - r t) = sum r^k t^k.
  static PowerSeries geometric(const Rational& r, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Coefficient of t^k; throws OutOfTruncation for k > order().
  const Rational& coeff(std::size_t k) const;
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }

  /// Index of the first nonzero coefficient, or nullopt when the series is
  /// zero up to its order.
  std::optional<std::size_t> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  PowerSeries truncate(std::size_t order) const;

  /// f(-t).
  PowerSeries reflect() const;

  /// f(t) / t^k. The first k coefficients must vanish; the order drops by k.
  PowerSeries divide_by_t(std::size_t k = 1) const;

  /// t^k f(t), truncated to the same order.
  PowerSeries multiply_by_t(std::size_t k = 1) const;

  PowerSeries derivative() const;

  /// Coefficient-wise comparison up to min(order(), other.order()).
  bool agrees_with(const PowerSeries& other) const;

  PowerSeries operator-() const;
  PowerSeries& operator*=(const Rational& c);

  friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator*(PowerSeries f, const Rational& c) { return f *= c; }
  friend PowerSeries operator*(const Rational& c, PowerSeries f) { return f *= c; }

  /// Same order and same coefficients.
  friend bool operator==(const PowerSeries& f, const PowerSeries& g) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// g with f g = 1 to order N. Throws ZeroConstantTerm when c_0 = 0.
PowerSeries reciprocal(const PowerSeries& f);

/// num / den where the leading power of t in den is cancelled against num
/// (a removable singularity). Throws ZeroConstantTerm when den is zero to
/// its order or num does not vanish to the same power.
PowerSeries divide(const PowerSeries& num, const PowerSeries& den);

/// f(g(t)) by Horner accumulation. Throws InnerSeriesHasConstantTerm when
/// g(0) != 0.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);

/// hbar with h(hbar(t)) = hbar(h(t)) = t, solved coefficient by coefficient.
/// Throws NotOrderOne unless h_0 = 0 and h_1 != 0.
PowerSeries compositional_inverse(const PowerSeries& h);

/// e^{ct} = sum c^k t^k / k!.
PowerSeries exp_series(const Rational& c, std::size_t order);

/// f^n for n >= 0.
PowerSeries power(const PowerSeries& f, unsigned n);

}  // namespace dualkit
