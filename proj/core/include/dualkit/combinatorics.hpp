#pragma once

#include "dualkit/rational.hpp"

namespace dualkit {

/// n! for n >= 0.
mpz_class factorial(long n);

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!. Valid for any
/// rational upper index, in particular negative integers. Throws
/// NegativeLowerIndex when k < 0.
Rational binomial(const Rational& n, long k);
Rational binomial(long n, long k);

/// Harmonic number H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
Rational harmonic(long n);

}  // namespace dualkit
