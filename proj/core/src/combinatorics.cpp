#include "dualkit/combinatorics.hpp"

#include "dualkit/error.hpp"

namespace dualkit {

mpz_class factorial(long n) {
  if (n < 0) throw Error(ErrorKind::BadParameter, "factorial of a negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational binomial(const Rational& n, long k) {
  if (k < 0) throw Error(ErrorKind::NegativeLowerIndex, "binomial lower index " + std::to_string(k));
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= (n - i) / Rational(i + 1);
  return r;
}

Rational binomial(long n, long k) {
  if (k < 0) throw Error(ErrorKind::NegativeLowerIndex, "binomial lower index " + std::to_string(k));
  if (n >= 0) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
  }
  // C(n,k) = (-1)^k C(k-n-1, k) for negative n.
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
  return k % 2 == 0 ? Rational(r) : -Rational(r);
}

Rational harmonic(long n) {
  Rational h = 0;
  for (long k = 1; k <= n; ++k) h += Rational(1, k);
  return h;
}

}  // namespace dualkit
