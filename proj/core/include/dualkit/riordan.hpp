#pragma once

/**
 * @file riordan.hpp
 * @brief Truncated Riordan arrays (d(t), h(t)).
 *
 * Entry (n, k) is [t^n] d(t) h(t)^k. An array of order N knows rows 0..N.
 * Columns d h^k are computed on first use and shared between copies.
 */

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dualkit/power_series.hpp"

namespace dualkit {

using Matrix = std::vector<std::vector<Rational>>;

class RiordanArray {
 public:
  /// Requires d(0) != 0 (ZeroConstantTerm) and h(0) = 0, h'(0) != 0
  /// (NotOrderOne). The order is min(d.order(), h.order()).
  RiordanArray(PowerSeries d, PowerSeries h);

  const PowerSeries& d() const { return d_; }
  const PowerSeries& h() const { return h_; }
  std::size_t order() const { return d_.order(); }

  /// [t^n] d h^k, zero above the diagonal. Throws OutOfTruncation for n > order().
  Rational entry(std::size_t n, std::size_t k) const;

  /// Rows 0..order(), each of length order()+1.
  Matrix matrix() const;

  /// The column generating function d h^k.
  const PowerSeries& column(std::size_t k) const;

  /// (-d, h).
  RiordanArray operator-() const;

  friend bool operator==(const RiordanArray& a, const RiordanArray& b) { return a.d_ == b.d_ && a.h_ == b.h_; }

 private:
  struct Columns;
  const std::vector<PowerSeries>& columns() const;

  PowerSeries d_;
  PowerSeries h_;
  std::shared_ptr<Columns> cache_;
};

/// (d1 d2(h1), h2(h1)) at the smaller order.
RiordanArray multiply(const RiordanArray& a, const RiordanArray& b);
inline RiordanArray operator*(const RiordanArray& a, const RiordanArray& b) { return multiply(a, b); }

/// (1/d(hbar), hbar).
RiordanArray inverse(const RiordanArray& r);

/// d(t) f(h(t)).
PowerSeries apply(const RiordanArray& r, const PowerSeries& f);

/// A(t) = t/hbar(t), so that h = t A(h). Carries order N-1.
PowerSeries a_function(const RiordanArray& r);

/// Z(t) = (1 - d_0/d(hbar(t)))/hbar(t), so that d = d_0/(1 - t Z(h)).
/// Carries order N-1.
PowerSeries z_function(const RiordanArray& r);

/// R R = (1, t) up to order.
bool is_involution(const RiordanArray& r);

enum class PseudoCriterion { Square, Conjugate, AZ, DBar };

/**
 * R (1,-t) is an involution, decided by one of four tests:
 *  - Square:    (R M)^2 = I with M = (1,-t)
 *  - Conjugate: M R M = R^-1
 *  - AZ:        A(t) = -t/h(-t) and Z(t) = (d(-t) - 1)/h(-t)
 *  - DBar:      hbar(t) = -h(-t) and d(t) = h(-t)/(h(-t) - t d(-t) + t)
 *
 * AZ and DBar are evaluated on d(0) R, so they need d(0) = 1 or -1 (any
 * other value already rules out a pseudo-involution). DBar is only
 * equivalent to the others when Z is constant.
 *
 * Throws DegenerateDenominator when the DBar denominator vanishes to order.
 */
bool is_pseudo_involution(const RiordanArray& r, PseudoCriterion criterion);

/**
 * h = t Z(t)/(Z(-t)(1 - t Z(t))) and d = h Z(-t)/(t Z(t)). The stored
 * coefficients of Z are read as exact, zero past Z.order(). Throws
 * ZeroConstantTerm when Z(0) = 0.
 */
RiordanArray construct_from_z(const PowerSeries& z, std::size_t order);

enum class Builtin { Pascal, PascalInv, R1, R2, R3, R4, Identity, M };

RiordanArray builtin(Builtin name, std::size_t order);
RiordanArray identity_array(std::size_t order);

std::string to_string(Builtin name);
std::string to_string(PseudoCriterion c);
/// Case-insensitive; accepts "pascal-inv" and "pascal_inv".
std::optional<Builtin> parse_builtin(std::string_view name);

}  // namespace dualkit
