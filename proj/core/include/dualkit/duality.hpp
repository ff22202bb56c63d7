#pragma once

/**
 * @file duality.hpp
 * @brief The four signed binomial dual transforms and the dual Bernoulli
 *        and Euler constructions.
 *
 *   D1: a*_n = sum C(n,k) (-1)^k     a_k     (matrix R1)
 *   D2: a*_n = sum C(n,k) (-1)^(k+1) a_k     (matrix R2)
 *   D3: a*_n = sum C(n,k) (-1)^n     a_k     (matrix R3)
 *   D4: a*_n = sum C(n,k) (-1)^(n+1) a_k     (matrix R4)
 */

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dualkit/polynomial.hpp"
#include "dualkit/report.hpp"
#include "dualkit/riordan.hpp"
#include "dualkit/sequences.hpp"

namespace dualkit {

enum class DualRelation { D1, D2, D3, D4 };

inline constexpr DualRelation kAllRelations[] = {DualRelation::D1, DualRelation::D2, DualRelation::D3,
                                                 DualRelation::D4};

std::string to_string(DualRelation rel);
/// "D1".."D4", case-insensitive.
std::optional<DualRelation> parse_relation(std::string_view text);

/// R1..R4 at the given order.
RiordanArray relation_matrix(DualRelation rel, std::size_t order);

/// b_n = sum_k entry(rel, n, k) a_k for n <= a.order().
NamedSequence dual_transform(const NamedSequence& a, DualRelation rel);

bool is_self_dual(const NamedSequence& a, DualRelation rel);

/// B*_n, the D1 dual of B_n.
NamedSequence dual_bernoulli(std::size_t n);
/// B*_n(x) = sum C(n,k) B*_k x^(n-k).
Polynomial dual_bernoulli_poly(std::size_t n);
PolynomialFamily dual_bernoulli_polys(std::size_t n);

/// B*_n = (-1)^n B_n + n and B*_n(x) = (-1)^n B_n(-x-1), checked for n <= N.
std::vector<IdentityReport> verify_dual_bernoulli_closed_forms(std::size_t n);

/// The six closed forms for the D3 dual of (-1)^n B_n, the D4 dual of
/// E_n(1/2) - 2^-n and the D2 dual of its signed version, numbers and
/// polynomials, for n <= N.
std::vector<IdentityReport> verify_thm12_closed_forms(std::size_t n);

/// sum B*_n(x0) t^n/n! = -t e^((x0+1)t)/(e^-t - 1) to order N at each sample.
IdentityReport verify_dual_gf(std::size_t n, const std::vector<Rational>& samples);

/// D1/D2: a(x/(x-1)) = +-(1-x) a(x);  D3/D4: a(-x/(1+x)) = +-(1+x) a(x).
bool ogf_functional_check(const NamedSequence& a, DualRelation rel);

/// EGF times e^(-x/2) (D1, D2) or e^(x/2) (D3, D4) is even (D1, D3) or odd
/// (D2, D4).
bool egf_parity_check(const NamedSequence& a, DualRelation rel);

/// b_n = 2 a_(n+1) + sign a_n. Throws TooShort when a has fewer than two
/// terms and BadParameter unless sign is 1 or -1.
NamedSequence shift_transform(const NamedSequence& a, int sign);

}  // namespace dualkit
