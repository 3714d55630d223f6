#pragma once

#include <gmpxx.h>

#include <string>

namespace relcount {

// All counts are exact arbitrary-precision integers; operations defined here
// never produce a negative value.
using Nat = mpz_class;

// Exact rational, kept canonical (denominator > 0, gcd(|num|, den) = 1).
using Ratio = mpq_class;

// n! by iterated multiplication.
Nat factorial(unsigned long n);

// Subfactorial !n via the recursion !n = n * !(n-1) + (-1)^n with !0 = 1.
Nat subfactorial(unsigned long n);

// !n computed as floor((n! + 1) / e).  The value of e is enclosed by partial
// sums of 1/i! with remainder bound 2/(M+1)!; the enclosure is widened until
// both endpoints agree on the floor.  Requires n >= 1.
Nat subfactorial_floor(unsigned long n);

// Binomial coefficient C(n, k).  Rejects k > n.
Nat binomial(unsigned long n, unsigned long k);

// base^exp with the convention 0^0 = 1.
Nat pow_nat(const Nat& base, unsigned long exp);
Nat pow_nat(unsigned long base, unsigned long exp);

// 2^exp.
Nat pow2(unsigned long exp);

// num/den reduced to lowest terms; den must be nonzero.
Ratio make_ratio(const Nat& num, const Nat& den);

// Rational interval known to contain a transcendental constant.
struct Enclosure {
  Ratio lo;
  Ratio hi;
};

// lo < e < hi where lo is the partial sum of 1/i! for i <= terms and
// hi = lo + 2/(terms+1)!.
Enclosure e_enclosure(unsigned long terms);

}  // namespace relcount
