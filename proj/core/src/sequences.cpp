#include "dualkit/sequences.hpp"

#include <charconv>

#include "dualkit/combinatorics.hpp"
#include "dualkit/error.hpp"
#include "dualkit/power_series.hpp"

namespace dualkit {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::Recurrence: return "recurrence";
    case Provenance::GfExtraction: return "gf-extraction";
  }
  return "?";
}

namespace {

/// n! [t^n] of each coefficient.
std::vector<Rational> egf_values(const PowerSeries& s) {
  std::vector<Rational> v(s.order() + 1);
  for (std::size_t k = 0; k <= s.order(); ++k) v[k] = s[k] * Rational(factorial(static_cast<long>(k)));
  return v;
}

/// sum C(n,k) x^(n-k) a_k.
Polynomial appell(const std::vector<Rational>& a, std::size_t n) {
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[n - k] = binomial(static_cast<long>(n), static_cast<long>(k)) * a[k];
  return Polynomial(std::move(c));
}

}  // namespace

NamedSequence bernoulli_numbers(std::size_t n) {
  // (e^t - 1)/t = sum t^k/(k+1)!
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = Rational(1) / Rational(factorial(static_cast<long>(k + 1)));
  return {"bernoulli", egf_values(reciprocal(PowerSeries(std::move(c)))), Provenance::GfExtraction};
}

NamedSequence bernoulli_numbers_recurrence(std::size_t n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational s = 0;
    for (std::size_t k = 0; k < m; ++k) s += binomial(static_cast<long>(m + 1), static_cast<long>(k)) * b[k];
    b[m] = -s / Rational(m + 1);
  }
  return {"bernoulli", std::move(b), Provenance::Recurrence};
}

Polynomial bernoulli_poly(std::size_t n) { return appell(bernoulli_numbers(n).values, n); }

PolynomialFamily bernoulli_polys(std::size_t n) {
  const auto b = bernoulli_numbers(n).values;
  PolynomialFamily f{"bernoulli-poly", {}};
  for (std::size_t m = 0; m <= n; ++m) f.polys.push_back(appell(b, m));
  return f;
}

PolynomialFamily euler_polys(std::size_t n) {
  PolynomialFamily f{"euler-poly", {}};
  f.polys.reserve(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    Polynomial e = Polynomial::monomial(1, m);
    for (std::size_t k = 0; k < m; ++k) {
      e -= (binomial(static_cast<long>(m), static_cast<long>(k)) / Rational(2)) * f.polys[k];
    }
    f.polys.push_back(std::move(e));
  }
  return f;
}

Polynomial euler_poly(std::size_t n) { return euler_polys(n).polys[n]; }

NamedSequence euler_numbers(std::size_t n) {
  const auto f = euler_polys(n);
  std::vector<Rational> e(n + 1);
  const Rational half(1, 2);
  for (std::size_t m = 0; m <= n; ++m) e[m] = Rational(2).pow(static_cast<long>(m)) * f.polys[m](half);
  return {"euler", std::move(e), Provenance::Recurrence};
}

NamedSequence conjugate_bernoulli_numbers(std::size_t n) {
  // (1 + 2t - e^t)/t = 1 - sum_{k>=1} t^k/(k+1)!
  std::vector<Rational> c(n + 1);
  c[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) c[k] = -(Rational(1) / Rational(factorial(static_cast<long>(k + 1))));
  return {"conj-bernoulli", egf_values(reciprocal(PowerSeries(std::move(c)))), Provenance::GfExtraction};
}

Polynomial conjugate_bernoulli_poly(std::size_t n) { return appell(conjugate_bernoulli_numbers(n).values, n); }

PolynomialFamily conjugate_bernoulli_polys(std::size_t n) {
  const auto b = conjugate_bernoulli_numbers(n).values;
  PolynomialFamily f{"conj-bernoulli-poly", {}};
  for (std::size_t m = 0; m <= n; ++m) f.polys.push_back(appell(b, m));
  return f;
}

NamedSequence euler_half_shifted(std::size_t n) {
  const auto f = euler_polys(n);
  std::vector<Rational> a(n + 1);
  const Rational half(1, 2);
  for (std::size_t m = 0; m <= n; ++m) a[m] = f.polys[m](half) - half.pow(static_cast<long>(m));
  return {"euler-half-shifted", std::move(a), Provenance::Recurrence};
}

NamedSequence signed_euler_half_shifted(std::size_t n) {
  auto s = euler_half_shifted(n);
  for (std::size_t m = 1; m <= n; m += 2) s.values[m] = -s.values[m];
  s.name = "signed-euler-half-shifted";
  return s;
}

NamedSequence corpus(Corpus which, std::size_t n, long m) {
  std::vector<Rational> v(n + 1);
  switch (which) {
    case Corpus::PowHalf:
      for (std::size_t k = 0; k <= n; ++k) v[k] = Rational(1, 2).pow(static_cast<long>(k));
      return {"pow-half", std::move(v), Provenance::ClosedForm};
    case Corpus::InvBinom:
      if (m < 1) throw Error(ErrorKind::BadParameter, "inv-binom needs m >= 1");
      for (std::size_t k = 0; k <= n; ++k) v[k] = binomial(static_cast<long>(k) + 2 * m - 1, m).inverse();
      return {m == 1 ? "inv-binom" : "inv-binom-" + std::to_string(m), std::move(v), Provenance::ClosedForm};
    case Corpus::SignedBernoulli: {
      v = bernoulli_numbers(n).values;
      for (std::size_t k = 1; k <= n; k += 2) v[k] = -v[k];
      return {"signed-bernoulli", std::move(v), Provenance::GfExtraction};
    }
    case Corpus::Lucas:
      v[0] = 2;
      if (n >= 1) v[1] = 1;
      for (std::size_t k = 2; k <= n; ++k) v[k] = v[k - 1] + v[k - 2];
      return {"lucas", std::move(v), Provenance::Recurrence};
    case Corpus::NFib: {
      // a_n = n F_{n-1}, a_0 = 0.
      Rational prev = 1;  // F_{k-2}, starting with F_{-1} = 1
      Rational cur = 0;   // F_{k-1}
      for (std::size_t k = 1; k <= n; ++k) {
        v[k] = Rational(k) * cur;
        Rational next = prev + cur;
        prev = cur;
        cur = next;
      }
      return {"nfib", std::move(v), Provenance::Recurrence};
    }
    case Corpus::Harmonic:
      for (std::size_t k = 1; k <= n; ++k) v[k] = v[k - 1] + Rational(1, static_cast<long>(k));
      return {"harmonic", std::move(v), Provenance::Recurrence};
  }
  throw Error(ErrorKind::BadParameter, "unknown corpus sequence");
}

NamedSequence sequence_by_name(std::string_view name, std::size_t n) {
  if (name == "bernoulli") return bernoulli_numbers(n);
  if (name == "bernoulli-recurrence") return bernoulli_numbers_recurrence(n);
  if (name == "euler") return euler_numbers(n);
  if (name == "signed-bernoulli") return corpus(Corpus::SignedBernoulli, n);
  if (name == "conj-bernoulli") return conjugate_bernoulli_numbers(n);
  if (name == "euler-half-shifted") return euler_half_shifted(n);
  if (name == "signed-euler-half-shifted") return signed_euler_half_shifted(n);
  if (name == "pow-half") return corpus(Corpus::PowHalf, n);
  if (name == "inv-binom") return corpus(Corpus::InvBinom, n, 1);
  if (name.starts_with("inv-binom-")) {
    const auto digits = name.substr(10);
    long m = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw Error(ErrorKind::BadParameter, "bad inv-binom parameter in '" + std::string(name) + "'");
    }
    return corpus(Corpus::InvBinom, n, m);
  }
  if (name == "lucas") return corpus(Corpus::Lucas, n);
  if (name == "nfib") return corpus(Corpus::NFib, n);
  if (name == "harmonic") return corpus(Corpus::Harmonic, n);
  throw Error(ErrorKind::BadParameter, "unknown sequence '" + std::string(name) + "'");
}

std::vector<std::string> sequence_names() {
  return {"bernoulli", "bernoulli-recurrence", "euler", "signed-bernoulli", "conj-bernoulli",
          "euler-half-shifted", "signed-euler-half-shifted", "pow-half", "inv-binom", "inv-binom-<m>",
          "lucas", "nfib", "harmonic"};
}

PolynomialFamily family_by_name(std::string_view name, std::size_t n) {
  if (name == "bernoulli-poly") return bernoulli_polys(n);
  if (name == "euler-poly") return euler_polys(n);
  if (name == "conj-bernoulli-poly") return conjugate_bernoulli_polys(n);
  throw Error(ErrorKind::BadParameter, "unknown polynomial family '" + std::string(name) + "'");
}

std::vector<std::string> family_names() { return {"bernoulli-poly", "euler-poly", "conj-bernoulli-poly"}; }

}  // namespace dualkit
