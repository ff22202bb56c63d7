#pragma once

/**
 * @file identity_lab.hpp
 * @brief Exact checks of the two-variable Bernoulli/Euler identities, the
 *        f-identities for self-dual sequences, and the harmonic-number
 *        matrix identity.
 *
 * Two-variable identities in (x, y), with z eliminated through the linear
 * constraint, are evaluated on a product grid. A residual of degree at most
 * d in x and in y that vanishes on (d+1) x (d+1) distinct points is the zero
 * polynomial, so a HOLDS verdict on such a grid is a proof for those k, l.
 *
 * Some displays hold only after a sign or exponent correction. Those are
 * checked as printed first; when the printed form fails, the listed
 * alternative readings are tried in order and the report records the
 * printed verdict, the reading that held, and a note.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dualkit/duality.hpp"
#include "dualkit/polynomial.hpp"
#include "dualkit/report.hpp"
#include "dualkit/sequences.hpp"

namespace dualkit {

struct GridSpec {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  /// When false, an undersized grid is evaluated anyway and the report is
  /// marked non-deterministic instead of raising GridTooSmall.
  bool require_deterministic = true;
};

/// (degree+1) distinct x values crossed with (degree+1) distinct y values.
GridSpec auto_grid(std::size_t degree);

/// "x1,x2,...;y1,y2,..." with rational entries. Throws ParseError.
GridSpec parse_grid(std::string_view text);

/// C_{n,alpha}(x) = (-1)^n sum C(n,k) a_k (x - alpha)^(n-k); the starred
/// variant uses the dual of a under the given convention.
Polynomial c_poly(std::size_t n, const Rational& alpha, const NamedSequence& a, DualRelation convention,
                  bool starred);

struct Thm21Params {
  long k = 0;
  long l = 0;
  Rational alpha = 0;
  DualRelation convention = DualRelation::D3;
  NamedSequence a;  ///< needs at least k+l+3 terms
};

/// thm21.integral, thm21.derivative, thm21.weighted on x + y + z = 1 + 2 alpha.
std::vector<IdentityReport> check_thm21(const Thm21Params& p, const GridSpec& grid);

/// Runs check_thm21 under each of D1..D4.
std::map<DualRelation, std::vector<IdentityReport>> sweep_thm21(Thm21Params p, const GridSpec& grid);

/// x + y + z = 1. The generic forms (cor22.integral, cor22.derivative,
/// cor22.weighted) use the sequence a under D3; the Bernoulli forms
/// (cor22.bernoulli-integral, cor22.bernoulli-derivative,
/// cor22.bernoulli-weighted) are evaluated directly from B_n(x).
std::vector<IdentityReport> check_cor22(long k, long l, const GridSpec& grid, const NamedSequence* a = nullptr);

/// Conjugate Bernoulli forms on x + y + z = 1: cor23.integral,
/// cor23.derivative, cor23.weighted. The starred family is the D1 dual.
std::vector<IdentityReport> check_cor23(long k, long l, const GridSpec& grid);

/// Euler forms on x + y + z = 2: cor24.integral, cor24.derivative, and the
/// number identities cor24.number-endpoint (x=1, y=0, z=1),
/// cor24.number-midpoint (x=1, y=z=1/2) and cor24.number-difference.
std::vector<IdentityReport> check_cor24(long k, long l, const GridSpec& grid);

/// f values f(0..N); variant v in 1..4 pairs with D_v. Skipped when a is
/// not self-dual under D_v.
IdentityReport check_thm16(const std::vector<Rational>& f, const NamedSequence& a, int variant, std::size_t n);

/// The four f-identities with B_n and E_n(1/2) - 2^-n built in.
std::vector<IdentityReport> check_thm17(const std::vector<Rational>& f, std::size_t n);

/// thm65.matrix (rows 0..N of the matrix form) and thm65.sum (rows 1..N).
std::vector<IdentityReport> check_thm65(std::size_t n, const std::vector<std::pair<Rational, Rational>>& samples);

enum class ConventionFamily { Thm21, Cor23, Cor24 };

std::string to_string(ConventionFamily f);

struct ConventionBounds {
  long max_k = 3;
  long max_l = 3;
  std::vector<std::uint64_t> seeds = {1};  ///< used by Thm21 only
  Rational alpha = Rational(1, 3);          ///< used by Thm21 only
};

struct ConventionResult {
  /// display id -> conventions under which it held everywhere
  std::map<std::string, std::vector<DualRelation>> holding;
  /// Conventions under which every display held.
  std::vector<DualRelation> all_displays;
};

/**
 * Sweeps D1..D4 through the three displays of thm21 for a family's data:
 * Thm21 uses seeded random rational sequences at bounds.alpha, Cor23 uses
 * a_k = (-1)^k tB_k at alpha 0, Cor24 uses a_k = E_k(1/2) - 2^-k at 1/2.
 */
ConventionResult detect_convention(ConventionFamily family, const ConventionBounds& bounds);

/// Same sweep for a caller-supplied sequence.
ConventionResult detect_convention(const NamedSequence& a, const Rational& alpha, const ConventionBounds& bounds);

/// Seeded random rationals p/q with |p| <= 9, 1 <= q <= 9.
NamedSequence random_sequence(std::size_t n, std::uint64_t seed);

}  // namespace dualkit
