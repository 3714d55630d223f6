#pragma once

#include <cstddef>
#include <vector>

#include "relcount/arith.hpp"
#include "relcount/relation.hpp"

namespace relcount {

// Closed-form counts of class members on |X| = m, |Y| = n (m == n for the
// homogeneous-only classes) with exactly k fixed/reflexive points.
Nat count_with_k(RelationClass c, std::size_t m, std::size_t n, std::size_t k);

// Members with exactly k fixed points and l out-domain elements; only the
// transitive/idempotent partial-function classes carry the second parameter.
Nat count_with_kl(RelationClass c, std::size_t n, std::size_t k, std::size_t l);

// Total number of class members.
Nat count_total(RelationClass c, std::size_t m, std::size_t n);

// Members without any fixed/reflexive point (the k = 0 special case).
Nat count_without(RelationClass c, std::size_t m, std::size_t n);

// Members with at least one fixed/reflexive point.
Nat count_with_at_least_one(RelationClass c, std::size_t m, std::size_t n);

// Exact probability that a uniformly chosen member has a fixed/reflexive point.
Ratio probability_at_least_one(RelationClass c, std::size_t m, std::size_t n);

// Number of involutions on an n-set with exactly k fixed points; zero when
// n - k is odd.
Nat involution_count_k(std::size_t n, std::size_t k);

// Total involutions I_n via I_n = I_{n-1} + (n-1) I_{n-2}.
Nat involution_total(std::size_t n);

// Ratio J_n(k) / J_n(k+2); defined when n - k is even, k <= n - 2 and the
// denominator is positive.  Equals (k+1)(k+2)/(n-k).
Ratio involution_ratio_E(std::size_t n, std::size_t k);

// count_with_k for k = 0..m as a list.
std::vector<Nat> profile_by_k(RelationClass c, std::size_t m, std::size_t n);

}  // namespace relcount
