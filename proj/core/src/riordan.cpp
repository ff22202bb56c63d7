#include "dualkit/riordan.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

#include "dualkit/error.hpp"

namespace dualkit {

struct RiordanArray::Columns {
  std::once_flag once;
  std::vector<PowerSeries> cols;
};

RiordanArray::RiordanArray(PowerSeries d, PowerSeries h) : cache_(std::make_shared<Columns>()) {
  const std::size_t n = std::min(d.order(), h.order());
  if (d[0].is_zero()) throw Error(ErrorKind::ZeroConstantTerm, "Riordan array needs d(0) != 0");
  if (!h[0].is_zero() || n < 1 || h[1].is_zero()) {
    throw Error(ErrorKind::NotOrderOne, "Riordan array needs h(0) = 0 and h'(0) != 0");
  }
  d_ = d.truncate(n);
  h_ = h.truncate(n);
}

const std::vector<PowerSeries>& RiordanArray::columns() const {
  std::call_once(cache_->once, [this] {
    auto& cols = cache_->cols;
    cols.reserve(order() + 1);
    cols.push_back(d_);
    for (std::size_t k = 1; k <= order(); ++k) cols.push_back(cols.back() * h_);
  });
  return cache_->cols;
}

const PowerSeries& RiordanArray::column(std::size_t k) const {
  if (k > order()) throw Error(ErrorKind::OutOfTruncation, "column index beyond order");
  return columns()[k];
}

Rational RiordanArray::entry(std::size_t n, std::size_t k) const {
  if (n > order()) {
    throw Error(ErrorKind::OutOfTruncation,
                "row " + std::to_string(n) + " beyond order " + std::to_string(order()));
  }
  if (k > n) return 0;
  return columns()[k][n];
}

Matrix RiordanArray::matrix() const {
  const std::size_t n = order();
  const auto& cols = columns();
  Matrix m(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t r = k; r <= n; ++r) m[r][k] = cols[k][r];
  }
  return m;
}

RiordanArray RiordanArray::operator-() const { return RiordanArray(-d_, h_); }

RiordanArray multiply(const RiordanArray& a, const RiordanArray& b) {
  return RiordanArray(a.d() * compose(b.d(), a.h()), compose(b.h(), a.h()));
}

RiordanArray inverse(const RiordanArray& r) {
  const PowerSeries hbar = compositional_inverse(r.h());
  return RiordanArray(reciprocal(compose(r.d(), hbar)), hbar);
}

PowerSeries apply(const RiordanArray& r, const PowerSeries& f) { return r.d() * compose(f, r.h()); }

namespace {

/// t f(t) from f known to order N-1, giving order N.
PowerSeries times_t_extended(const PowerSeries& f) {
  std::vector<Rational> c(f.order() + 2);
  for (std::size_t k = 0; k <= f.order(); ++k) c[k + 1] = f[k];
  return PowerSeries(std::move(c));
}

}  // namespace

PowerSeries a_function(const RiordanArray& r) {
  const PowerSeries hbar = compositional_inverse(r.h());
  const PowerSeries a = reciprocal(hbar.divide_by_t());
  if (!(times_t_extended(compose(a, r.h())) == r.h())) {
    throw Error(ErrorKind::NotOrderOne, "A-function failed h = t A(h)");
  }
  return a;
}

PowerSeries z_function(const RiordanArray& r) {
  const PowerSeries hbar = compositional_inverse(r.h());
  const std::size_t n = r.order();
  const PowerSeries num = PowerSeries::one(n) - r.d()[0] * reciprocal(compose(r.d(), hbar));
  const PowerSeries z = divide(num, hbar);
  const PowerSeries check = r.d() * (PowerSeries::one(n) - times_t_extended(compose(z, r.h())));
  if (!(check == PowerSeries::constant(r.d()[0], n))) {
    throw Error(ErrorKind::NotOrderOne, "Z-function failed d = d0/(1 - t Z(h))");
  }
  return z;
}

RiordanArray identity_array(std::size_t order) {
  return RiordanArray(PowerSeries::one(order), PowerSeries::variable(order));
}

bool is_involution(const RiordanArray& r) { return r * r == identity_array(r.order()); }

namespace {

bool unit_normalized(const RiordanArray& r, RiordanArray& out) {
  const Rational& d0 = r.d()[0];
  if (d0 == Rational(1)) {
    out = r;
    return true;
  }
  if (d0 == Rational(-1)) {
    out = -r;
    return true;
  }
  return false;
}

bool check_az(const RiordanArray& r) {
  const std::size_t n = r.order();
  const PowerSeries h_reflected = r.h().reflect();
  const PowerSeries a_expected = divide(-PowerSeries::variable(n), h_reflected);
  const PowerSeries z_expected = divide(r.d().reflect() - PowerSeries::one(n), h_reflected);
  return a_function(r).agrees_with(a_expected) && z_function(r).agrees_with(z_expected);
}

bool check_dbar(const RiordanArray& r) {
  const std::size_t n = r.order();
  const PowerSeries h_reflected = r.h().reflect();
  if (!(compositional_inverse(r.h()) == -h_reflected)) return false;
  const PowerSeries den = h_reflected - r.d().reflect().multiply_by_t() + PowerSeries::variable(n);
  const auto v = den.valuation();
  if (!v) throw Error(ErrorKind::DegenerateDenominator, "h(-t) - t d(-t) + t vanishes to order");
  if (*v > 1) return false;  // h(-t) has valuation 1, so the quotient has a pole
  return r.d().agrees_with(divide(h_reflected, den));
}

}  // namespace

bool is_pseudo_involution(const RiordanArray& r, PseudoCriterion criterion) {
  const std::size_t n = r.order();
  const RiordanArray m = builtin(Builtin::M, n);
  switch (criterion) {
    case PseudoCriterion::Square:
      return is_involution(r * m);
    case PseudoCriterion::Conjugate:
      return m * r * m == inverse(r);
    case PseudoCriterion::AZ:
    case PseudoCriterion::DBar: {
      RiordanArray normalized = r;
      if (!unit_normalized(r, normalized)) return false;
      return criterion == PseudoCriterion::AZ ? check_az(normalized) : check_dbar(normalized);
    }
  }
  return false;
}

RiordanArray construct_from_z(const PowerSeries& z, std::size_t order) {
  if (z[0].is_zero()) throw Error(ErrorKind::ZeroConstantTerm, "construction from Z needs Z(0) != 0");
  // One extra order absorbs the division by t Z(t) in d.
  const std::size_t m = order + 1;
  const PowerSeries zm(std::vector<Rational>(z.coeffs().begin(), z.coeffs().end()), m);
  const PowerSeries tz = zm.multiply_by_t();
  const PowerSeries z_reflected = zm.reflect();
  const PowerSeries h = tz * reciprocal(z_reflected * (PowerSeries::one(m) - tz));
  const PowerSeries d = divide(h * z_reflected, tz);
  return RiordanArray(d.truncate(order), h.truncate(order));
}

RiordanArray builtin(Builtin name, std::size_t order) {
  const PowerSeries t = PowerSeries::variable(order);
  const PowerSeries one_minus = PowerSeries::geometric(1, order);   // 1/(1-t)
  const PowerSeries one_plus = PowerSeries::geometric(-1, order);   // 1/(1+t)
  switch (name) {
    case Builtin::Pascal:
      return RiordanArray(one_minus, t * one_minus);
    case Builtin::PascalInv:
      return RiordanArray(one_plus, t * one_plus);
    case Builtin::R1:
      return RiordanArray(one_minus, -(t * one_minus));
    case Builtin::R2:
      return RiordanArray(-one_minus, -(t * one_minus));
    case Builtin::R3:
      return RiordanArray(one_plus, -(t * one_plus));
    case Builtin::R4:
      return RiordanArray(-one_plus, -(t * one_plus));
    case Builtin::Identity:
      return identity_array(order);
    case Builtin::M:
      return RiordanArray(PowerSeries::one(order), -t);
  }
  throw Error(ErrorKind::BadParameter, "unknown builtin");
}

std::string to_string(Builtin name) {
  switch (name) {
    case Builtin::Pascal: return "pascal";
    case Builtin::PascalInv: return "pascal-inv";
    case Builtin::R1: return "r1";
    case Builtin::R2: return "r2";
    case Builtin::R3: return "r3";
    case Builtin::R4: return "r4";
    case Builtin::Identity: return "identity";
    case Builtin::M: return "m";
  }
  return "?";
}

std::string to_string(PseudoCriterion c) {
  switch (c) {
    case PseudoCriterion::Square: return "square";
    case PseudoCriterion::Conjugate: return "conjugate";
    case PseudoCriterion::AZ: return "az";
    case PseudoCriterion::DBar: return "dbar";
  }
  return "?";
}

std::optional<Builtin> parse_builtin(std::string_view name) {
  std::string s(name);
  for (auto& ch : s) {
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (ch == '_') ch = '-';
  }
  for (Builtin b : {Builtin::Pascal, Builtin::PascalInv, Builtin::R1, Builtin::R2, Builtin::R3, Builtin::R4,
                    Builtin::Identity, Builtin::M}) {
    if (to_string(b) == s) return b;
  }
  return std::nullopt;
}

}  // namespace dualkit
