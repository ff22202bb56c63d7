#pragma once

/**
 * @file sequences.hpp
 * @brief Generators for the Bernoulli, Euler and conjugate Bernoulli
 *        families and for a small corpus of self-dual sequences.
 *
 * Bernoulli numbers use B_1 = -1/2 (generating function t/(e^t - 1)).
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dualkit/polynomial.hpp"
#include "dualkit/rational.hpp"

namespace dualkit {

enum class Provenance { ClosedForm, Recurrence, GfExtraction };

struct NamedSequence {
  std::string name;
  std::vector<Rational> values;  ///< a_0 .. a_N
  Provenance provenance = Provenance::ClosedForm;

  std::size_t order() const { return values.empty() ? 0 : values.size() - 1; }
  const Rational& operator[](std::size_t n) const { return values[n]; }
};

/// polys[n] is the degree-n member.
struct PolynomialFamily {
  std::string name;
  std::vector<Polynomial> polys;
};

std::string to_string(Provenance p);

/// B_0..B_N from t/(e^t - 1).
NamedSequence bernoulli_numbers(std::size_t n);
/// B_0..B_N from sum_{k<=n} C(n+1,k) B_k = 0.
NamedSequence bernoulli_numbers_recurrence(std::size_t n);

/// B_n(x) = sum C(n,k) B_k x^(n-k).
Polynomial bernoulli_poly(std::size_t n);
PolynomialFamily bernoulli_polys(std::size_t n);

/// E_n(x) = x^n - (1/2) sum_{k<n} C(n,k) E_k(x).
Polynomial euler_poly(std::size_t n);
PolynomialFamily euler_polys(std::size_t n);

/// E_n = 2^n E_n(1/2).
NamedSequence euler_numbers(std::size_t n);

/// Conjugate Bernoulli numbers from t/(1 + 2t - e^t).
NamedSequence conjugate_bernoulli_numbers(std::size_t n);
/// sum C(n,k) x^(n-k) tB_k.
Polynomial conjugate_bernoulli_poly(std::size_t n);
PolynomialFamily conjugate_bernoulli_polys(std::size_t n);

/// E_n(1/2) - 2^-n.
NamedSequence euler_half_shifted(std::size_t n);
/// (-1)^n (E_n(1/2) - 2^-n).
NamedSequence signed_euler_half_shifted(std::size_t n);

enum class Corpus { PowHalf, InvBinom, SignedBernoulli, Lucas, NFib, Harmonic };

/// m is used by InvBinom only and must be >= 1 (BadParameter otherwise).
NamedSequence corpus(Corpus which, std::size_t n, long m = 1);

/**
 * Number sequences by name: bernoulli, bernoulli-recurrence, euler,
 * signed-bernoulli, conj-bernoulli, euler-half-shifted,
 * signed-euler-half-shifted, pow-half, inv-binom (m = 1) or inv-binom-<m>,
 * lucas, nfib, harmonic. Throws BadParameter on an unknown name.
 */
NamedSequence sequence_by_name(std::string_view name, std::size_t n);
std::vector<std::string> sequence_names();

/// bernoulli-poly, euler-poly, conj-bernoulli-poly.
PolynomialFamily family_by_name(std::string_view name, std::size_t n);
std::vector<std::string> family_names();

}  // namespace dualkit
