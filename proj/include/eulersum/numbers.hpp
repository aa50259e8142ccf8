#pragma once

#include "eulersum/rational.hpp"

namespace eulersum {

/// Bernoulli number B_m for the generating function x/(e^x - 1), so B_1 = -1/2.
Rational bernoulli(unsigned m);

/// Euler number E_m (sec x = sum (-1)^j E_{2j} x^{2j} / (2j)!).
/// Odd Euler numbers vanish by convention; odd m is rejected so that a
/// miscomputed index fails loudly instead of silently contributing zero.
mpz_class euler_number(unsigned m);

/// Binomial coefficient for integer arguments; zero when k < 0 or k > n.
mpz_class binomial(long n, long k);

/// Generalized binomial C(a, k) = a(a-1)...(a-k+1)/k! for rational a.
Rational binomial(const Rational& a, unsigned k);

mpz_class factorial(unsigned n);
mpz_class double_factorial(unsigned n);  // n!! = n(n-2)(n-4)...

/// Floor division valid for negative numerators (b > 0).
long floor_div(long a, long b);

/// (-1)^k for any integer k.
inline int parity_sign(long k) { return (k % 2 != 0) ? -1 : 1; }

}  // namespace eulersum
