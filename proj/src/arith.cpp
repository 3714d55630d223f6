#include "relcount/arith.hpp"

#include <stdexcept>

namespace relcount {

Nat factorial(unsigned long n) {
  Nat r = 1;
  for (unsigned long i = 2; i <= n; ++i) r *= i;
  return r;
}

Nat subfactorial(unsigned long n) {
  Nat r = 1;  // !0
  for (unsigned long i = 1; i <= n; ++i) {
    r *= i;
    if (i % 2 == 0)
      r += 1;
    else
      r -= 1;
  }
  return r;
}

Enclosure e_enclosure(unsigned long terms) {
  // Sum 1/i! for i <= terms over the common denominator terms!.
  Nat den = factorial(terms);
  Nat num = 0;
  Nat term = den;  // terms!/0!
  num += term;
  for (unsigned long i = 1; i <= terms; ++i) {
    term /= i;  // terms!/i!
    num += term;
  }
  Enclosure enc;
  enc.lo = make_ratio(num, den);
  enc.hi = enc.lo + make_ratio(2, den * (terms + 1));
  return enc;
}

Nat subfactorial_floor(unsigned long n) {
  if (n < 1) throw std::invalid_argument("subfactorial_floor: n must be >= 1");
  Nat target = factorial(n) + 1;
  for (unsigned long m = n + 4;; m *= 2) {
    Enclosure e = e_enclosure(m);
    // (n!+1)/e lies in [target/hi, target/lo]; the floor is pinned once both
    // endpoints agree.
    Nat f_lo = Nat(target * e.hi.get_den()) / Nat(e.hi.get_num());
    Nat f_hi = Nat(target * e.lo.get_den()) / Nat(e.lo.get_num());
    if (f_lo == f_hi) return f_lo;
  }
}

Nat binomial(unsigned long n, unsigned long k) {
  if (k > n) throw std::invalid_argument("binomial: k > n");
  if (k > n - k) k = n - k;
  Nat r = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

Nat pow_nat(const Nat& base, unsigned long exp) {
  Nat r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Nat pow_nat(unsigned long base, unsigned long exp) {
  Nat r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

Nat pow2(unsigned long exp) { return Nat(1) << exp; }

Ratio make_ratio(const Nat& num, const Nat& den) {
  if (den == 0) throw std::invalid_argument("make_ratio: zero denominator");
  Ratio r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace relcount
