#include "dualkit/identity_lab.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <set>

#include "dualkit/combinatorics.hpp"
#include "dualkit/error.hpp"

namespace dualkit {

namespace {

using Eval2 = std::function<Rational(const Rational& x, const Rational& y)>;

struct Reading {
  std::string name;
  Eval2 residual;
  std::string note;  ///< recorded when this reading is the one that held
};

Rational pw(const Rational& x, long e) { return x.pow(e); }
Rational sgn(long e) { return Rational(sign_pow(e)); }
Rational bin(long n, long k) { return binomial(n, k); }
/// (k+l+1) C(k+l, k)
Rational beta_denominator(long k, long l) { return Rational(k + l + 1) * bin(k + l, k); }

std::size_t distinct_count(const std::vector<Rational>& v) {
  std::set<Rational> s(v.begin(), v.end());
  return s.size();
}

/// Validates the grid against the degree bound; returns whether a zero
/// residual on it certifies the identity.
bool certify_grid(const GridSpec& grid, std::size_t degree, const std::string& id) {
  const bool ok = distinct_count(grid.xs) > degree && distinct_count(grid.ys) > degree;
  if (!ok && grid.require_deterministic) {
    throw Error(ErrorKind::GridTooSmall, id + " needs more than " + std::to_string(degree) +
                                             " distinct values in x and in y");
  }
  return ok;
}

struct Constraint {
  Rational total;  ///< x + y + z = total
  Rational z(const Rational& x, const Rational& y) const { return total - x - y; }
};

IdentityReport run_grid(const std::string& id, const GridSpec& grid, const Constraint& c, const Eval2& f) {
  IdentityReport rep(id);
  for (const auto& x : grid.xs) {
    for (const auto& y : grid.ys) rep.add({{"x", x}, {"y", y}, {"z", c.z(x, y)}}, f(x, y));
  }
  return rep;
}

/// Evaluates readings[0] (the printed form); if it fails, the first
/// alternative that holds becomes the verdict.
IdentityReport run_readings(const std::string& id, const GridSpec& grid, std::size_t degree, const Constraint& c,
                            const std::vector<Reading>& readings) {
  const bool deterministic = certify_grid(grid, degree, id);
  IdentityReport printed = run_grid(id, grid, c, readings.front().residual);
  printed.deterministic = deterministic;
  if (printed.verdict == Verdict::Holds || readings.size() == 1) return printed;
  for (std::size_t i = 1; i < readings.size(); ++i) {
    IdentityReport alt = run_grid(id, grid, c, readings[i].residual);
    if (alt.verdict != Verdict::Holds) continue;
    alt.deterministic = deterministic;
    alt.reading = readings[i].name;
    alt.reinterpreted = true;
    alt.printed_verdict = Verdict::Fails;
    alt.printed_failure = printed.first_failure;
    alt.notes.push_back("printed form fails; holds as " + readings[i].name + ": " + readings[i].note);
    return alt;
  }
  printed.notes.push_back("printed form fails and no listed reading holds");
  return printed;
}

void add_kl(IdentityReport& r, long k, long l) {
  r.param("k", std::to_string(k));
  r.param("l", std::to_string(l));
}

/// Values p(v) for every member of a family.
std::vector<Rational> eval_all(const std::vector<Polynomial>& polys, const Rational& v) {
  std::vector<Rational> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p(v));
  return out;
}

}  // namespace

GridSpec auto_grid(std::size_t degree) {
  GridSpec g;
  const long d = static_cast<long>(degree);
  for (long i = 0; i <= d; ++i) {
    g.xs.emplace_back(2 * i - d, 2);
    g.ys.emplace_back(3 * i - d, 3);
  }
  return g;
}

GridSpec parse_grid(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw Error(ErrorKind::ParseError, "grid needs 'xs;ys'");
  auto parse_list = [](std::string_view s) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= s.size()) {
      const auto comma = s.find(',', start);
      const auto piece = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      out.push_back(Rational::parse(piece));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  };
  return GridSpec{parse_list(text.substr(0, semi)), parse_list(text.substr(semi + 1)), true};
}

Polynomial c_poly(std::size_t n, const Rational& alpha, const NamedSequence& a, DualRelation convention,
                  bool starred) {
  if (a.values.size() <= n) throw Error(ErrorKind::TooShort, "sequence shorter than the requested degree");
  NamedSequence head{a.name, std::vector<Rational>(a.values.begin(), a.values.begin() + static_cast<long>(n) + 1),
                     a.provenance};
  const std::vector<Rational> coeffs = starred ? dual_transform(head, convention).values : head.values;
  const Polynomial shifted = Polynomial::linear_root(alpha);
  Polynomial p;
  for (std::size_t k = 0; k <= n; ++k) {
    p += bin(static_cast<long>(n), static_cast<long>(k)) * coeffs[k] * shifted.pow(static_cast<unsigned>(n - k));
  }
  return sgn(static_cast<long>(n)) * p;
}

namespace {

struct CFamily {
  std::vector<Polynomial> plain;
  std::vector<Polynomial> starred;
};

CFamily c_family(std::size_t top, const Rational& alpha, const NamedSequence& a, DualRelation convention) {
  if (a.values.size() <= top) throw Error(ErrorKind::TooShort, "sequence shorter than the requested degree");
  NamedSequence head{a.name, std::vector<Rational>(a.values.begin(), a.values.begin() + static_cast<long>(top) + 1),
                     a.provenance};
  const NamedSequence dual = dual_transform(head, convention);
  const Polynomial shifted = Polynomial::linear_root(alpha);
  std::vector<Polynomial> powers{Polynomial::constant(1)};
  for (std::size_t i = 1; i <= top; ++i) powers.push_back(powers.back() * shifted);
  CFamily f;
  for (std::size_t n = 0; n <= top; ++n) {
    Polynomial p;
    Polynomial q;
    for (std::size_t k = 0; k <= n; ++k) {
      const Rational b = bin(static_cast<long>(n), static_cast<long>(k));
      p += b * head.values[k] * powers[n - k];
      q += b * dual.values[k] * powers[n - k];
    }
    const Rational s = sgn(static_cast<long>(n));
    f.plain.push_back(s * p);
    f.starred.push_back(s * q);
  }
  return f;
}

/// Residuals of the three thm21 displays at one point from C_n(y) and C*_n(z).
struct Thm21Eval {
  long k;
  long l;
  Rational a0;
  std::array<Rational, 3> operator()(const Rational& x, const std::vector<Rational>& cy,
                                     const std::vector<Rational>& cz) const {
    Rational l7;
    Rational l8;
    Rational r8;
    Rational l9;
    for (long j = 0; j <= k; ++j) {
      const Rational s = sgn(j) * bin(k, j);
      l7 += s * pw(x, k - j) * cy[l + j + 1] / Rational(l + j + 1);
      l8 += s * pw(x, k - j) * cy[l + j];
      l9 += sgn(j) * Rational(l + j + 1) * pw(x, k - j + 1) * bin(k + 1, j) * cy[l + j];
    }
    for (long j = 0; j <= l; ++j) {
      const Rational s = sgn(j) * bin(l, j);
      l7 += s * pw(x, l - j) * cz[k + j + 1] / Rational(k + j + 1);
      r8 += s * pw(x, l - j) * cz[k + j];
      l9 += sgn(j) * Rational(k + j + 1) * pw(x, l - j + 1) * bin(l + 1, j) * cz[k + j];
    }
    const Rational r7 = a0 * pw(x, k + l + 1) / beta_denominator(k, l);
    const Rational r9 = Rational(k + l + 2) * (sgn(k) * cy[k + l + 1] + sgn(l) * cz[k + l + 1]);
    return {l7 - r7, l8 - r8, l9 - r9};
  }
};

}  // namespace

std::vector<IdentityReport> check_thm21(const Thm21Params& p, const GridSpec& grid) {
  if (p.k < 0 || p.l < 0) throw Error(ErrorKind::BadParameter, "k and l must be non-negative");
  const std::size_t top = static_cast<std::size_t>(p.k + p.l + 1);
  const CFamily fam = c_family(top, p.alpha, p.a, p.convention);
  const std::size_t degree = top;
  const char* names[3] = {"thm21.integral", "thm21.derivative", "thm21.weighted"};
  const bool deterministic = certify_grid(grid, degree, names[0]);
  std::vector<IdentityReport> reps;
  for (const char* n : names) {
    IdentityReport r(n);
    add_kl(r, p.k, p.l);
    r.param("alpha", p.alpha.str());
    r.param("convention", to_string(p.convention));
    r.param("sequence", p.a.name);
    r.deterministic = deterministic;
    reps.push_back(std::move(r));
  }
  const Constraint c{Rational(1) + Rational(2) * p.alpha};
  const Thm21Eval eval{p.k, p.l, p.a.values[0]};
  for (const auto& x : grid.xs) {
    for (const auto& y : grid.ys) {
      const Rational z = c.z(x, y);
      const auto res = eval(x, eval_all(fam.plain, y), eval_all(fam.starred, z));
      for (std::size_t i = 0; i < 3; ++i) reps[i].add({{"x", x}, {"y", y}, {"z", z}}, res[i]);
    }
  }
  if (!deterministic) {
    for (auto& r : reps) r.notes.push_back("grid below the degree bound; verdict is a sample, not a proof");
  }
  return reps;
}

std::map<DualRelation, std::vector<IdentityReport>> sweep_thm21(Thm21Params p, const GridSpec& grid) {
  std::map<DualRelation, std::vector<IdentityReport>> out;
  for (DualRelation rel : kAllRelations) {
    p.convention = rel;
    out[rel] = check_thm21(p, grid);
  }
  return out;
}

std::vector<IdentityReport> check_cor22(long k, long l, const GridSpec& grid, const NamedSequence* a) {
  if (k < 0 || l < 0) throw Error(ErrorKind::BadParameter, "k and l must be non-negative");
  const std::size_t top = static_cast<std::size_t>(k + l + 1);
  Thm21Params p{k, l, Rational(0), DualRelation::D3, a != nullptr ? *a : bernoulli_numbers(top)};
  std::vector<IdentityReport> reps = check_thm21(p, grid);
  const char* generic[3] = {"cor22.integral", "cor22.derivative", "cor22.weighted"};
  for (std::size_t i = 0; i < 3; ++i) reps[i].id = generic[i];

  const auto bp = bernoulli_polys(top).polys;
  const Constraint c{Rational(1)};
  auto B = [&](long n, const Rational& v) { return bp[static_cast<std::size_t>(n)](v); };

  const Eval2 integral = [&, c](const Rational& x, const Rational& y) {
    const Rational z = c.z(x, y);
    Rational s1;
    Rational s2;
    for (long j = 0; j <= k; ++j) s1 += pw(x, k - j) * bin(k, j) * B(l + j + 1, y) / Rational(l + j + 1);
    for (long j = 0; j <= l; ++j) s2 += pw(x, l - j) * bin(l, j) * B(k + j + 1, z) / Rational(k + j + 1);
    return sgn(l + 1) * s1 + sgn(k + 1) * s2 - pw(x, k + l + 1) / beta_denominator(k, l);
  };
  const Eval2 derivative = [&, c](const Rational& x, const Rational& y) {
    const Rational z = c.z(x, y);
    Rational s1;
    Rational s2;
    for (long j = 0; j <= k; ++j) s1 += pw(x, k - j) * bin(k, j) * B(l + j, y);
    for (long j = 0; j <= l; ++j) s2 += pw(x, l - j) * bin(l, j) * B(k + j, z);
    return sgn(l) * s1 - sgn(k) * s2;
  };
  // shift adds to the x exponents; flip negates both right-hand signs.
  auto weighted = [&, c](long shift, bool flip) -> Eval2 {
    return [&, c, shift, flip](const Rational& x, const Rational& y) {
      const Rational z = c.z(x, y);
      Rational s1;
      Rational s2;
      for (long j = 0; j <= k; ++j) s1 += Rational(l + j + 1) * pw(x, k - j + shift) * bin(k + 1, j) * B(l + j, y);
      for (long j = 0; j <= l; ++j) s2 += Rational(k + j + 1) * pw(x, l - j + shift) * bin(l + 1, j) * B(k + j, z);
      const Rational lhs = sgn(l) * s1 + sgn(k) * s2;
      const long ey = flip ? l + 1 : k;
      const long ez = flip ? k + 1 : l;
      return lhs - Rational(k + l + 2) * (sgn(ey) * B(k + l + 1, y) + sgn(ez) * B(k + l + 1, z));
    };
  };

  const std::size_t degree = top;
  const std::vector<std::pair<const char*, std::vector<Reading>>> displays = {
      {"cor22.bernoulli-integral", {{"printed", integral, ""}}},
      {"cor22.bernoulli-derivative", {{"printed", derivative, ""}}},
      {"cor22.bernoulli-weighted",
       {{"printed", weighted(0, false), ""},
        {"exponents", weighted(1, false), "x^(k-j+1) and x^(l-j+1) in the sums"},
        {"signs", weighted(0, true), "right-hand signs (-1)^(l+1) on B(y) and (-1)^(k+1) on B(z)"},
        {"exponents-and-signs", weighted(1, true),
         "x^(k-j+1) and x^(l-j+1) in the sums, right-hand signs (-1)^(l+1) on B(y) and (-1)^(k+1) on B(z)"}}},
  };
  for (const auto& [id, readings] : displays) {
    IdentityReport r = run_readings(id, grid, degree, c, readings);
    add_kl(r, k, l);
    if (!r.deterministic) r.notes.push_back("grid below the degree bound; verdict is a sample, not a proof");
    reps.push_back(std::move(r));
  }
  return reps;
}

std::vector<IdentityReport> check_cor23(long k, long l, const GridSpec& grid) {
  if (k < 0 || l < 0) throw Error(ErrorKind::BadParameter, "k and l must be non-negative");
  const std::size_t top = static_cast<std::size_t>(k + l + 1);
  const auto tb = conjugate_bernoulli_polys(top).polys;
  const auto tb_star_numbers = dual_transform(conjugate_bernoulli_numbers(top), DualRelation::D1).values;
  std::vector<Polynomial> tbs;
  for (std::size_t n = 0; n <= top; ++n) {
    std::vector<Rational> c(n + 1);
    for (std::size_t j = 0; j <= n; ++j) c[n - j] = bin(static_cast<long>(n), static_cast<long>(j)) * tb_star_numbers[j];
    tbs.emplace_back(std::move(c));
  }
  const Constraint c{Rational(1)};
  auto T = [&](long n, const Rational& v) { return tb[static_cast<std::size_t>(n)](v); };
  auto TS = [&](long n, const Rational& v) { return tbs[static_cast<std::size_t>(n)](v); };

  // signed_second: weight (-1)^(k+j+1) on the terms of the second sum.
  auto integral = [&, c](bool signed_second) -> Eval2 {
    return [&, c, signed_second](const Rational& x, const Rational& y) {
      const Rational z = c.z(x, y);
      Rational s1;
      Rational s2;
      for (long j = 0; j <= k; ++j) {
        s1 += bin(k, j) * pw(x, k - j) * sgn(j + 1) * T(l + j + 1, -y) / Rational(l + j + 1);
      }
      for (long j = 0; j <= l; ++j) {
        const Rational w = signed_second ? sgn(k + j + 1) : Rational(1);
        s2 += w * bin(l, j) * pw(x, l - j) * TS(k + j + 1, -z) / Rational(k + j + 1);
      }
      return sgn(k) * s1 + s2 - sgn(k + 1) * pw(x, k + l + 1) / beta_denominator(k, l);
    };
  };
  const Eval2 derivative = [&, c](const Rational& x, const Rational& y) {
    const Rational z = c.z(x, y);
    Rational s1;
    Rational s2;
    for (long j = 0; j <= k; ++j) s1 += bin(k, j) * pw(-x, k - j) * T(l + j, -y);
    for (long j = 0; j <= l; ++j) s2 += bin(l, j) * pw(-x, l - j) * TS(k + j, -z);
    return sgn(k) * s1 - sgn(l) * s2;
  };
  const Eval2 weighted = [&, c](const Rational& x, const Rational& y) {
    const Rational z = c.z(x, y);
    Rational s1;
    Rational s2;
    for (long j = 0; j <= k; ++j) s1 += bin(k + 1, j) * pw(-x, k - j + 1) * Rational(l + j + 1) * T(l + j, -y);
    for (long j = 0; j <= l; ++j) s2 += bin(l + 1, j) * pw(-x, l - j + 1) * Rational(k + j + 1) * TS(k + j, -z);
    const Rational lhs = sgn(l) * s1 + sgn(k) * s2;
    return lhs - Rational(k + l + 2) * (sgn(l + 1) * T(k + l + 1, -y) + sgn(k + 1) * TS(k + l + 1, -z));
  };

  const std::size_t degree = top;
  const std::vector<std::pair<const char*, std::vector<Reading>>> displays = {
      {"cor23.integral",
       {{"printed", integral(false), ""},
        {"signed-second-sum", integral(true), "second sum weighted by (-1)^(k+j+1)"}}},
      {"cor23.derivative", {{"printed", derivative, ""}}},
      {"cor23.weighted", {{"printed", weighted, ""}}},
  };
  std::vector<IdentityReport> reps;
  for (const auto& [id, readings] : displays) {
    IdentityReport r = run_readings(id, grid, degree, c, readings);
    add_kl(r, k, l);
    if (std::string(id) == "cor23.weighted") {
      r.notes.push_back("right-hand index of the starred term read as k+l+1");
    }
    if (!r.deterministic) r.notes.push_back("grid below the degree bound; verdict is a sample, not a proof");
    reps.push_back(std::move(r));
  }
  return reps;
}

namespace {

/// integral_0^hi t^l (t+x)^k dt
Rational integral_shifted(long k, long l, const Rational& x, const Rational& hi) {
  return definite_integral(Polynomial::monomial(1, static_cast<std::size_t>(l)) *
                               Polynomial({x, 1}).pow(static_cast<unsigned>(k)),
                           0, hi);
}

/// integral_0^hi t^k (x-t)^l dt
Rational integral_reflected(long k, long l, const Rational& x, const Rational& hi) {
  return definite_integral(Polynomial::monomial(1, static_cast<std::size_t>(k)) *
                               Polynomial({x, -1}).pow(static_cast<unsigned>(l)),
                           0, hi);
}

}  // namespace

std::vector<IdentityReport> check_cor24(long k, long l, const GridSpec& grid) {
  if (k < 0 || l < 0) throw Error(ErrorKind::BadParameter, "k and l must be non-negative");
  const std::size_t top = static_cast<std::size_t>(k + l + 1);
  const auto ep = euler_polys(top).polys;
  const Constraint c{Rational(2)};
  auto E = [&](long n, const Rational& v) { return ep[static_cast<std::size_t>(n)](v); };

  // Sums of the integral display with y and z = 2 - x - y as arguments
  // (the z sum is evaluated at 1 - z).
  auto py = [&](const Rational& x, const Rational& y) {
    Rational s;
    for (long j = 0; j <= k; ++j) s += sgn(l + 1) * pw(x, k - j) * bin(k, j) * E(l + j + 1, y) / Rational(l + j + 1);
    return s;
  };
  auto pz = [&](const Rational& x, const Rational& one_minus_z) {
    Rational s;
    for (long j = 0; j <= l; ++j) s += sgn(j) * pw(x, l - j) * bin(l, j) * E(k + j + 1, one_minus_z) / Rational(k + j + 1);
    return s;
  };
  // s = +1 is the printed (D4 dual) form, s = -1 the D3 dual.
  auto integral = [&, c](int s) -> Eval2 {
    return [&, c, s](const Rational& x, const Rational& y) {
      const Rational z = c.z(x, y);
      const Rational S(s);
      const Rational lhs = py(x, y) + S * pz(x, Rational(1) - z);
      const Rational rhs = sgn(l + 1) * integral_shifted(k, l, x, y) - S * integral_reflected(k, l, x, x + y) +
                           Rational(2) * S * integral_reflected(k, l, x, x + y - Rational(1));
      return lhs - rhs;
    };
  };
  auto derivative = [&, c](int s) -> Eval2 {
    return [&, c, s](const Rational& x, const Rational& y) {
      const Rational z = c.z(x, y);
      Rational s1;
      Rational s2;
      for (long j = 0; j <= k; ++j) s1 += pw(x, k - j) * bin(k, j) * E(l + j, y);
      for (long j = 0; j <= l; ++j) s2 += sgn(j) * pw(x, l - j) * bin(l, j) * E(k + j, Rational(1) - z);
      const Rational lhs = sgn(l) * s1 - sgn(l) * pw(y, l) * pw(x + y, k);
      const Rational rhs = s2 + pw(x + y, k) * pw(-y, l) -
                           Rational(2) * pw(x + y - Rational(1), k) * pw(Rational(1) - y, l);
      return lhs - Rational(s) * rhs;
    };
  };

  const std::string d3_note = "starred sequence taken as the D3 dual (the negative of the printed D4 dual)";
  const std::size_t degree = top;
  std::vector<IdentityReport> reps;
  const std::vector<std::pair<const char*, std::vector<Reading>>> displays = {
      {"cor24.integral", {{"printed", integral(1), ""}, {"d3-dual", integral(-1), d3_note}}},
      {"cor24.derivative", {{"printed", derivative(1), ""}, {"d3-dual", derivative(-1), d3_note}}},
  };
  for (const auto& [id, readings] : displays) {
    IdentityReport r = run_readings(id, grid, degree, c, readings);
    add_kl(r, k, l);
    if (!r.deterministic) r.notes.push_back("grid below the degree bound; verdict is a sample, not a proof");
    reps.push_back(std::move(r));
  }

  // Number identities: fixed points, one residual per reading.
  const Rational half(1, 2);
  const Rational inv_beta = beta_denominator(k, l).inverse();
  const Rational b_half = incomplete_beta(half, k + 1, l + 1);
  const Rational b_three_halves = incomplete_beta(Rational(3, 2), k + 1, l + 1);
  struct NumberReading {
    std::string name;
    Rational residual;
    std::string note;
  };
  auto settle = [&](const char* id, Point point, const std::vector<NumberReading>& readings) {
    IdentityReport r(id);
    add_kl(r, k, l);
    r.add(point, readings.front().residual);
    if (r.verdict == Verdict::Fails) {
      for (std::size_t i = 1; i < readings.size(); ++i) {
        if (!readings[i].residual.is_zero()) continue;
        IdentityReport alt(id);
        add_kl(alt, k, l);
        alt.add(point, readings[i].residual);
        alt.reading = readings[i].name;
        alt.reinterpreted = true;
        alt.printed_verdict = Verdict::Fails;
        alt.printed_failure = r.first_failure;
        alt.notes.push_back("printed form fails; holds as " + readings[i].name + ": " + readings[i].note);
        r = std::move(alt);
        break;
      }
      if (!r.reinterpreted) r.notes.push_back("printed form fails and no listed reading holds");
    }
    reps.push_back(std::move(r));
  };

  const Rational one(1);
  const Rational zero(0);
  // x = 1, y = 0, z = 1
  const Rational ey = py(one, zero);
  const Rational ez = pz(one, zero);
  settle("cor24.number-endpoint", {{"x", one}, {"y", zero}, {"z", one}},
         {{"printed", ey + ez + inv_beta, ""},
          {"d3-dual", ey - ez - inv_beta, "second sum negated, right side +1/((k+l+1) C(k+l,k))"}});
  // x = 1, y = z = 1/2
  const Rational hy = py(one, half);
  const Rational hz = pz(one, half);
  settle("cor24.number-midpoint", {{"x", one}, {"y", half}, {"z", half}},
         {{"printed", hy + hz - (-inv_beta + Rational(2) * b_half - Rational(2) * b_three_halves), ""},
          {"d3-dual", hy - hz - (inv_beta - Rational(2) * b_half + Rational(2) * b_three_halves),
           "second sum negated with the printed right side negated"},
          {"d3-dual-corrected", hy - hz - (inv_beta - Rational(2) * b_half),
           "second sum negated, right side 1/((k+l+1) C(k+l,k)) - 2 B(1/2, k+1, l+1)"}});
  // difference of the two
  settle("cor24.number-difference", {{"x", one}, {"y", half}, {"z", half}},
         {{"printed", (hy - ey) + (hz - ez) - Rational(2) * (b_half - b_three_halves), ""},
          {"d3-dual-corrected", (hy - ey) - (hz - ez) + Rational(2) * b_half,
           "second sum negated, right side -2 B(1/2, k+1, l+1)"}});
  return reps;
}

IdentityReport check_thm16(const std::vector<Rational>& f, const NamedSequence& a, int variant, std::size_t n) {
  if (variant < 1 || variant > 4) throw Error(ErrorKind::BadParameter, "variant must be 1..4");
  if (f.size() <= n || a.values.size() <= n) throw Error(ErrorKind::TooShort, "need f(0..N) and a_0..a_N");
  IdentityReport rep("thm16.variant" + std::to_string(variant));
  rep.param("sequence", a.name);
  rep.param("order", std::to_string(n));
  const DualRelation rel = kAllRelations[variant - 1];
  NamedSequence head{a.name, std::vector<Rational>(a.values.begin(), a.values.begin() + static_cast<long>(n) + 1),
                     a.provenance};
  if (!is_self_dual(head, rel)) {
    rep.skip(a.name + " is not self-dual under " + to_string(rel));
    return rep;
  }
  for (long m = 0; m <= static_cast<long>(n); ++m) {
    Rational total;
    for (long k = 0; k <= m; ++k) {
      Rational inner;
      for (long j = 0; j <= k; ++j) {
        const Rational t = bin(k, j) * f[static_cast<std::size_t>(j)];
        inner += (variant >= 3) ? sgn(m - j) * t : t;
      }
      const Rational fk = f[static_cast<std::size_t>(k)];
      Rational bracket;
      switch (variant) {
        case 1: bracket = fk - sgn(m - k) * inner; break;
        case 2: bracket = fk + sgn(m - k) * inner; break;
        case 3: bracket = fk - inner; break;
        default: bracket = fk + inner; break;
      }
      total += bin(m, k) * bracket * head.values[static_cast<std::size_t>(m - k)];
    }
    rep.add({{"n", Rational(m)}}, total);
  }
  return rep;
}

std::vector<IdentityReport> check_thm17(const std::vector<Rational>& f, std::size_t n) {
  if (f.size() <= n) throw Error(ErrorKind::TooShort, "need f(0..N)");
  const auto b = bernoulli_numbers(n).values;
  const auto e = euler_half_shifted(n).values;
  std::vector<IdentityReport> reps;
  for (int d = 1; d <= 4; ++d) {
    IdentityReport rep("thm17.display" + std::to_string(d));
    rep.param("order", std::to_string(n));
    const auto& seq = (d % 2 == 1) ? b : e;
    for (long m = 0; m <= static_cast<long>(n); ++m) {
      Rational total;
      for (long k = 0; k <= m; ++k) {
        const Rational fk = f[static_cast<std::size_t>(k)];
        Rational bracket;
        Rational inner;
        for (long j = 0; j <= k; ++j) {
          const Rational t = bin(k, j) * f[static_cast<std::size_t>(j)];
          if (d == 3) {
            inner += sgn(m - j) * t;
          } else if (d == 4) {
            inner += sgn(k - j) * t;
          } else {
            inner += t;
          }
        }
        switch (d) {
          case 1: bracket = sgn(m - k) * fk - inner; break;
          case 2: bracket = fk + sgn(m - k) * inner; break;
          case 3: bracket = fk - inner; break;
          default: bracket = sgn(m - k) * fk + inner; break;
        }
        total += bin(m, k) * bracket * seq[static_cast<std::size_t>(m - k)];
      }
      rep.add({{"n", Rational(m)}}, total);
    }
    reps.push_back(std::move(rep));
  }
  return reps;
}

std::vector<IdentityReport> check_thm65(std::size_t n, const std::vector<std::pair<Rational, Rational>>& samples) {
  const auto tb = conjugate_bernoulli_polys(n).polys;
  IdentityReport mat("thm65.matrix");
  IdentityReport sum("thm65.sum");
  for (auto* r : {&mat, &sum}) r->param("order", std::to_string(n));
  const std::size_t size = n + 1;
  for (const auto& [x, y] : samples) {
    // [X] = [0] (+) [x^(r-k)/k], P[x] = (C(r,k) x^(r-k)), D = diag(0, 1, 1/2, ...)
    Matrix X(size, std::vector<Rational>(size));
    Matrix P(size, std::vector<Rational>(size));
    std::vector<Rational> D(size);
    std::vector<Rational> powers(size);
    for (std::size_t r = 0; r < size; ++r) {
      powers[r] = pw(x, static_cast<long>(r));
      if (r > 0) D[r] = Rational(1, static_cast<long>(r));
    }
    for (std::size_t r = 0; r < size; ++r) {
      for (std::size_t k = 0; k <= r; ++k) {
        if (k > 0) X[r][k] = powers[r - k] / Rational(k);
        P[r][k] = bin(static_cast<long>(r), static_cast<long>(k)) * powers[r - k];
      }
    }
    const auto b_xy = eval_all(tb, x + y);
    const auto b_y = eval_all(tb, y);
    for (std::size_t r = 0; r < size; ++r) {
      Rational lhs;
      Rational rhs;
      for (std::size_t k = 0; k <= r; ++k) {
        lhs += X[r][k] * b_xy[k];
        rhs += P[r][k] * D[k] * b_y[k] + X[r][k] * powers[k];
      }
      mat.add({{"x", x}, {"y", y}, {"row", Rational(r)}}, lhs - rhs);
    }
    for (std::size_t m = 1; m <= n; ++m) {
      Rational lhs;
      Rational rhs = harmonic(static_cast<long>(m)) * powers[m];
      for (std::size_t k = 1; k <= m; ++k) {
        lhs += b_xy[k] / Rational(k) * powers[m - k];
        rhs += bin(static_cast<long>(m), static_cast<long>(k)) * b_y[k] / Rational(k) * powers[m - k];
      }
      sum.add({{"x", x}, {"y", y}, {"n", Rational(m)}}, lhs - rhs);
    }
  }
  return {mat, sum};
}

std::string to_string(ConventionFamily f) {
  switch (f) {
    case ConventionFamily::Thm21: return "thm21";
    case ConventionFamily::Cor23: return "cor23";
    case ConventionFamily::Cor24: return "cor24";
  }
  return "?";
}

NamedSequence random_sequence(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  NamedSequence a{"random-" + std::to_string(seed), std::vector<Rational>(n + 1), Provenance::ClosedForm};
  for (auto& v : a.values) {
    const long p = num(rng);
    v = Rational(p, den(rng));
  }
  return a;
}

namespace {

/// display id -> set of conventions that held for every (k, l).
void sweep_into(const NamedSequence& a, const Rational& alpha, const ConventionBounds& bounds,
                std::map<std::string, std::set<DualRelation>>& held, bool first) {
  std::map<std::string, std::set<DualRelation>> now;
  for (DualRelation rel : kAllRelations) {
    std::map<std::string, bool> ok;
    for (long k = 0; k <= bounds.max_k; ++k) {
      for (long l = 0; l <= bounds.max_l; ++l) {
        Thm21Params p{k, l, alpha, rel, a};
        for (const auto& r : check_thm21(p, auto_grid(static_cast<std::size_t>(k + l + 1)))) {
          auto [it, inserted] = ok.emplace(r.id, true);
          it->second = it->second && r.verdict == Verdict::Holds;
        }
      }
    }
    for (const auto& [id, good] : ok) {
      auto& slot = now[id];
      if (good) slot.insert(rel);
    }
  }
  if (first) {
    held = std::move(now);
    return;
  }
  for (auto& [id, rels] : held) {
    std::set<DualRelation> keep;
    for (DualRelation rel : rels) {
      if (now[id].count(rel) != 0) keep.insert(rel);
    }
    rels = std::move(keep);
  }
}

ConventionResult finish(const std::map<std::string, std::set<DualRelation>>& held) {
  ConventionResult out;
  for (DualRelation rel : kAllRelations) {
    bool every = !held.empty();
    for (const auto& [id, rels] : held) every = every && rels.count(rel) != 0;
    if (every) out.all_displays.push_back(rel);
  }
  for (const auto& [id, rels] : held) out.holding[id] = std::vector<DualRelation>(rels.begin(), rels.end());
  return out;
}

}  // namespace

ConventionResult detect_convention(const NamedSequence& a, const Rational& alpha, const ConventionBounds& bounds) {
  std::map<std::string, std::set<DualRelation>> held;
  sweep_into(a, alpha, bounds, held, true);
  return finish(held);
}

ConventionResult detect_convention(ConventionFamily family, const ConventionBounds& bounds) {
  const std::size_t top = static_cast<std::size_t>(bounds.max_k + bounds.max_l + 1);
  std::map<std::string, std::set<DualRelation>> held;
  switch (family) {
    case ConventionFamily::Thm21: {
      bool first = true;
      for (std::uint64_t seed : bounds.seeds) {
        sweep_into(random_sequence(top, seed), bounds.alpha, bounds, held, first);
        first = false;
      }
      break;
    }
    case ConventionFamily::Cor23: {
      auto a = conjugate_bernoulli_numbers(top);
      for (std::size_t m = 1; m < a.values.size(); m += 2) a.values[m] = -a.values[m];
      a.name = "signed-conj-bernoulli";
      sweep_into(a, Rational(0), bounds, held, true);
      break;
    }
    case ConventionFamily::Cor24:
      sweep_into(euler_half_shifted(top), Rational(1, 2), bounds, held, true);
      break;
  }
  return finish(held);
}

}  // namespace dualkit
