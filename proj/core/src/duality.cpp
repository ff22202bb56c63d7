#include "dualkit/duality.hpp"

#include <algorithm>
#include <cctype>

#include "dualkit/combinatorics.hpp"
#include "dualkit/error.hpp"
#include "dualkit/power_series.hpp"

namespace dualkit {

std::string to_string(DualRelation rel) {
  switch (rel) {
    case DualRelation::D1: return "D1";
    case DualRelation::D2: return "D2";
    case DualRelation::D3: return "D3";
    case DualRelation::D4: return "D4";
  }
  return "?";
}

std::optional<DualRelation> parse_relation(std::string_view text) {
  if (text.size() != 2 || std::toupper(static_cast<unsigned char>(text[0])) != 'D') return std::nullopt;
  switch (text[1]) {
    case '1': return DualRelation::D1;
    case '2': return DualRelation::D2;
    case '3': return DualRelation::D3;
    case '4': return DualRelation::D4;
    default: return std::nullopt;
  }
}

RiordanArray relation_matrix(DualRelation rel, std::size_t order) {
  // The arrays need order >= 1 for h to be proper; a length-1 request still
  // only reads row 0.
  const std::size_t n = std::max<std::size_t>(order, 1);
  switch (rel) {
    case DualRelation::D1: return builtin(Builtin::R1, n);
    case DualRelation::D2: return builtin(Builtin::R2, n);
    case DualRelation::D3: return builtin(Builtin::R3, n);
    case DualRelation::D4: return builtin(Builtin::R4, n);
  }
  throw Error(ErrorKind::BadParameter, "unknown dual relation");
}

NamedSequence dual_transform(const NamedSequence& a, DualRelation rel) {
  NamedSequence b{a.name + "*" + to_string(rel), std::vector<Rational>(a.values.size()), a.provenance};
  if (a.values.empty()) return b;
  const RiordanArray r = relation_matrix(rel, a.order());
  for (std::size_t n = 0; n < a.values.size(); ++n) {
    mpq_class s = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      if (!a.values[k].is_zero()) s += r.entry(n, k).raw() * a.values[k].raw();
    }
    b.values[n] = Rational(std::move(s));
  }
  return b;
}

bool is_self_dual(const NamedSequence& a, DualRelation rel) { return dual_transform(a, rel).values == a.values; }

NamedSequence dual_bernoulli(std::size_t n) {
  auto b = dual_transform(bernoulli_numbers(n), DualRelation::D1);
  b.name = "dual-bernoulli";
  return b;
}

namespace {

Polynomial appell(const std::vector<Rational>& a, std::size_t n, const Polynomial& base) {
  Polynomial p;
  for (std::size_t k = 0; k <= n; ++k) {
    p += binomial(static_cast<long>(n), static_cast<long>(k)) * a[k] * base.pow(static_cast<unsigned>(n - k));
  }
  return p;
}

void add_poly_residual(IdentityReport& rep, std::size_t n, const Polynomial& residual, std::size_t degree) {
  for (std::size_t j = 0; j <= degree; ++j) {
    rep.add({{"n", Rational(n)}, {"coeff", Rational(j)}}, residual.coeff(j));
  }
}

}  // namespace

Polynomial dual_bernoulli_poly(std::size_t n) {
  return appell(dual_bernoulli(n).values, n, Polynomial::monomial(1, 1));
}

PolynomialFamily dual_bernoulli_polys(std::size_t n) {
  const auto b = dual_bernoulli(n).values;
  PolynomialFamily f{"dual-bernoulli-poly", {}};
  for (std::size_t m = 0; m <= n; ++m) f.polys.push_back(appell(b, m, Polynomial::monomial(1, 1)));
  return f;
}

std::vector<IdentityReport> verify_dual_bernoulli_closed_forms(std::size_t n) {
  const auto b = bernoulli_numbers(n).values;
  const auto bs = dual_bernoulli(n).values;
  IdentityReport numbers("thm11.numbers");
  numbers.param("order", std::to_string(n));
  for (std::size_t m = 0; m <= n; ++m) {
    numbers.add({{"n", Rational(m)}}, bs[m] - (Rational(sign_pow(static_cast<long>(m))) * b[m] + Rational(m)));
  }
  IdentityReport poly("thm11.poly");
  poly.param("order", std::to_string(n));
  const auto bpolys = bernoulli_polys(n);
  const auto spolys = dual_bernoulli_polys(n);
  const Polynomial reflected({-1, -1});  // -x - 1
  for (std::size_t m = 0; m <= n; ++m) {
    const Polynomial rhs = Rational(sign_pow(static_cast<long>(m))) * bpolys.polys[m].compose(reflected);
    add_poly_residual(poly, m, spolys.polys[m] - rhs, m);
  }
  return {numbers, poly};
}

std::vector<IdentityReport> verify_thm12_closed_forms(std::size_t n) {
  const auto b = bernoulli_numbers(n).values;
  const auto signed_b = corpus(Corpus::SignedBernoulli, n);
  const auto e = euler_half_shifted(n);
  const auto se = signed_euler_half_shifted(n);
  const auto epolys = euler_polys(n);
  const auto bpolys = bernoulli_polys(n);

  const auto d3 = dual_transform(signed_b, DualRelation::D3).values;
  const auto d4 = dual_transform(e, DualRelation::D4).values;
  const auto d2 = dual_transform(se, DualRelation::D2).values;

  const Rational half(1, 2);
  const Polynomial x = Polynomial::monomial(1, 1);
  const Polynomial x_minus_half = Polynomial::linear_root(half);
  auto euler_half = [&](std::size_t m) { return epolys.polys[m](half); };
  auto three_term = [&](std::size_t m) {
    return (Rational(3).pow(static_cast<long>(m)) - Rational(2)) / Rational(2).pow(static_cast<long>(m));
  };

  std::vector<IdentityReport> out;
  auto start = [&](const char* id, const char* claim) {
    IdentityReport r(id);
    r.param("order", std::to_string(n));
    r.param("claim", claim);
    return r;
  };

  IdentityReport r14 = start("thm12.signed-bernoulli-d3", "D3 dual of (-1)^n B_n = B_n + (-1)^n n");
  IdentityReport r15 = start("thm12.signed-bernoulli-d3-poly", "sum C(n,k) a*_k x^(n-k) = B_n(x) - n (x-1)^(n-1)");
  IdentityReport r16 = start("thm12.euler-d4", "D4 dual of E_n(1/2) - 2^-n = (-1)^n (E_n(1/2) + (3^n - 2)/2^n)");
  IdentityReport r17 = start("thm12.euler-d4-poly",
                             "sum C(n,k) (x-1/2)^(n-k) a*_k = (-1)^n E_n(1-x) - 2 (x-1)^n + (x-2)^n");
  IdentityReport r18 = start("thm12.signed-euler-d2", "D2 dual of (-1)^n (E_n(1/2) - 2^-n) = E_n(1/2) + (3^n - 2)/2^n");
  IdentityReport r19 = start("thm12.signed-euler-d2-poly",
                             "sum C(n,k) (x-1/2)^(n-k) a*_k = E_n(x) + (x+1)^n - 2 x^n");

  for (std::size_t m = 0; m <= n; ++m) {
    const Rational sg(sign_pow(static_cast<long>(m)));
    const auto mu = static_cast<unsigned>(m);
    r14.add({{"n", Rational(m)}}, d3[m] - (b[m] + sg * Rational(m)));
    r16.add({{"n", Rational(m)}}, d4[m] - sg * (euler_half(m) + three_term(m)));
    r18.add({{"n", Rational(m)}}, d2[m] - (euler_half(m) + three_term(m)));

    Polynomial rhs15 = bpolys.polys[m];
    if (m > 0) rhs15 -= Rational(m) * Polynomial::linear_root(1).pow(mu - 1);
    add_poly_residual(r15, m, appell(d3, m, x) - rhs15, m);

    const Polynomial rhs17 = sg * epolys.polys[m].compose(Polynomial({1, -1})) -
                             Rational(2) * Polynomial::linear_root(1).pow(mu) + Polynomial::linear_root(2).pow(mu);
    add_poly_residual(r17, m, appell(d4, m, x_minus_half) - rhs17, m);

    const Polynomial rhs19 =
        epolys.polys[m] + Polynomial::linear_root(-1).pow(mu) - Rational(2) * Polynomial::monomial(1, m);
    add_poly_residual(r19, m, appell(d2, m, x_minus_half) - rhs19, m);
  }
  for (auto* r : {&r14, &r15, &r16, &r17, &r18, &r19}) out.push_back(std::move(*r));
  return out;
}

IdentityReport verify_dual_gf(std::size_t n, const std::vector<Rational>& samples) {
  IdentityReport rep("cor12.gf");
  rep.param("order", std::to_string(n));
  const auto polys = dual_bernoulli_polys(n);
  for (const auto& x0 : samples) {
    // -t e^((x0+1)t) / (e^-t - 1), computed one order higher to absorb the
    // removable division by t.
    const PowerSeries num = -(exp_series(x0 + Rational(1), n + 1).multiply_by_t());
    const PowerSeries den = exp_series(-1, n + 1) - PowerSeries::one(n + 1);
    const PowerSeries closed = divide(num, den);
    for (std::size_t m = 0; m <= n; ++m) {
      const Rational lhs = polys.polys[m](x0) / Rational(factorial(static_cast<long>(m)));
      rep.add({{"x", x0}, {"n", Rational(m)}}, lhs - closed[m]);
    }
  }
  return rep;
}

namespace {

PowerSeries ogf(const NamedSequence& a) { return PowerSeries(a.values); }

PowerSeries egf(const NamedSequence& a) {
  std::vector<Rational> c(a.values.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.values[k] / Rational(factorial(static_cast<long>(k)));
  return PowerSeries(std::move(c));
}

bool is_d1_or_d2(DualRelation rel) { return rel == DualRelation::D1 || rel == DualRelation::D2; }
bool plus_sign(DualRelation rel) { return rel == DualRelation::D1 || rel == DualRelation::D3; }

}  // namespace

bool ogf_functional_check(const NamedSequence& a, DualRelation rel) {
  if (a.values.empty()) return true;
  const std::size_t n = a.order();
  const PowerSeries f = ogf(a);
  PowerSeries inner;
  PowerSeries factor;
  if (is_d1_or_d2(rel)) {
    inner = -(PowerSeries::geometric(1, n) - PowerSeries::one(n));  // x/(x-1) = -x - x^2 - ...
    factor = PowerSeries(std::vector<Rational>{1, -1}, n);
  } else {
    inner = PowerSeries::geometric(-1, n) - PowerSeries::one(n);  // -x/(1+x) = -x + x^2 - ...
    factor = PowerSeries(std::vector<Rational>{1, 1}, n);
  }
  const PowerSeries rhs = factor * f;
  return compose(f, inner) == (plus_sign(rel) ? rhs : -rhs);
}

bool egf_parity_check(const NamedSequence& a, DualRelation rel) {
  if (a.values.empty()) return true;
  const std::size_t n = a.order();
  const Rational c = is_d1_or_d2(rel) ? Rational(-1, 2) : Rational(1, 2);
  const PowerSeries g = egf(a) * exp_series(c, n);
  // Even functions have vanishing odd coefficients and vice versa.
  const std::size_t first = plus_sign(rel) ? 1 : 0;
  for (std::size_t k = first; k <= n; k += 2) {
    if (!g[k].is_zero()) return false;
  }
  return true;
}

NamedSequence shift_transform(const NamedSequence& a, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::BadParameter, "shift sign must be 1 or -1");
  if (a.values.size() < 2) throw Error(ErrorKind::TooShort, "shift transform needs at least two terms");
  NamedSequence b{a.name + (sign > 0 ? "+shift" : "-shift"), std::vector<Rational>(a.values.size() - 1),
                  a.provenance};
  for (std::size_t k = 0; k + 1 < a.values.size(); ++k) {
    b.values[k] = Rational(2) * a.values[k + 1] + Rational(sign) * a.values[k];
  }
  return b;
}

}  // namespace dualkit
