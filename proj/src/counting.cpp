#include "relcount/counting.hpp"

#include <stdexcept>

namespace relcount {
namespace {

void check_query(RelationClass c, std::size_t m, std::size_t n) {
  if (m > n) throw std::invalid_argument("count: m must be <= n");
  if (is_homogeneous_only(c) && m != n)
    throw std::invalid_argument("count: class requires m == n");
  if (n == 0 && !is_homogeneous_only(c))
    throw std::invalid_argument("count: n must be >= 1");
}

}  // namespace

Nat involution_count_k(std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("involution_count_k: k > n");
  if ((n - k) % 2 != 0) return 0;
  std::size_t pairs = (n - k) / 2;
  return factorial(n) / (pow2(pairs) * factorial(pairs) * factorial(k));
}

Nat involution_total(std::size_t n) {
  Nat prev = 1, cur = 1;  // I_0, I_1
  if (n <= 1) return 1;
  for (std::size_t i = 2; i <= n; ++i) {
    Nat next = cur + Nat(i - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Nat count_with_k(RelationClass c, std::size_t m, std::size_t n, std::size_t k) {
  check_query(c, m, n);
  if (k > m) throw std::invalid_argument("count_with_k: k > m");
  switch (c) {
    case RelationClass::Function:
      return binomial(m, k) * pow_nat(n - 1, m - k);
    case RelationClass::PartialFunction:
      return binomial(m, k) * pow_nat(n, m - k);
    case RelationClass::TotalRelation:
      return binomial(m, k) * pow2(k * (n - 1)) * pow_nat(pow2(n - 1) - 1, m - k);
    case RelationClass::ArbitraryRelation:
      return binomial(m, k) * pow2(m * (n - 1));
    case RelationClass::Permutation:
      return binomial(n, k) * subfactorial(n - k);
    case RelationClass::Involution:
      return involution_count_k(n, k);
    case RelationClass::IdempotentFunction:
      return binomial(n, k) * pow_nat(k, n - k);
    case RelationClass::IdempotentPartialFunction:
    case RelationClass::TransitivePartialFunction: {
      Nat sum = 0;
      for (std::size_t l = 0; l + k <= n; ++l) sum += count_with_kl(c, n, k, l);
      return sum;
    }
  }
  throw std::invalid_argument("count_with_k: unknown class");
}

Nat count_with_kl(RelationClass c, std::size_t n, std::size_t k, std::size_t l) {
  if (k + l > n) throw std::invalid_argument("count_with_kl: k + l > n");
  switch (c) {
    case RelationClass::TransitivePartialFunction:
      return binomial(n, k) * binomial(n - k, l) * pow_nat(k + l, n - (k + l));
    case RelationClass::IdempotentPartialFunction:
      return binomial(n, k) * binomial(n - k, l) * pow_nat(k, n - (k + l));
    default:
      throw std::invalid_argument("count_with_kl: class has no (k, l) profile");
  }
}

Nat count_total(RelationClass c, std::size_t m, std::size_t n) {
  check_query(c, m, n);
  switch (c) {
    case RelationClass::Function:
      return pow_nat(n, m);
    case RelationClass::PartialFunction:
      return pow_nat(n + 1, m);
    case RelationClass::TotalRelation:
      return pow_nat(pow2(n) - 1, m);
    case RelationClass::ArbitraryRelation:
      return pow2(m * n);
    case RelationClass::Permutation:
      return factorial(n);
    case RelationClass::Involution:
      return involution_total(n);
    case RelationClass::IdempotentFunction: {
      Nat sum = 0;
      for (std::size_t k = 0; k <= n; ++k) sum += binomial(n, k) * pow_nat(k, n - k);
      return sum;
    }
    case RelationClass::IdempotentPartialFunction: {
      Nat sum = 0;
      for (std::size_t k = 0; k <= n; ++k) sum += binomial(n, k) * pow_nat(k + 1, n - k);
      return sum;
    }
    case RelationClass::TransitivePartialFunction: {
      Nat sum = 0;
      for (std::size_t i = 0; i <= n; ++i)
        sum += binomial(n, i) * pow_nat(i, n - i) * pow2(i);
      return sum;
    }
  }
  throw std::invalid_argument("count_total: unknown class");
}

Nat count_without(RelationClass c, std::size_t m, std::size_t n) {
  return count_with_k(c, m, n, 0);
}

Nat count_with_at_least_one(RelationClass c, std::size_t m, std::size_t n) {
  return count_total(c, m, n) - count_without(c, m, n);
}

Ratio probability_at_least_one(RelationClass c, std::size_t m, std::size_t n) {
  return make_ratio(count_with_at_least_one(c, m, n), count_total(c, m, n));
}

Ratio involution_ratio_E(std::size_t n, std::size_t k) {
  if (k + 2 > n) throw std::invalid_argument("involution_ratio_E: k must be <= n - 2");
  if ((n - k) % 2 != 0)
    throw std::invalid_argument("involution_ratio_E: undefined when n - k is odd");
  return make_ratio(involution_count_k(n, k), involution_count_k(n, k + 2));
}

std::vector<Nat> profile_by_k(RelationClass c, std::size_t m, std::size_t n) {
  std::vector<Nat> values;
  values.reserve(m + 1);
  for (std::size_t k = 0; k <= m; ++k) values.push_back(count_with_k(c, m, n, k));
  return values;
}

}  // namespace relcount
