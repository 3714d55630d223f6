#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "relcount/arith.hpp"
#include "relcount/relation.hpp"

namespace relcount {

// Exhaustive count of class members grouped by the number of fixed/reflexive
// points k (and, for aware classes, by out-domain elements l).
struct CountProfile {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Nat> by_k;                  // length m + 1
  std::vector<std::vector<Nat>> by_kl;    // [k][l], empty unless the class tracks l

  Nat total() const;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration limits: 2^(m*n) <= 2^25 for relation families, radix^m <= 10^7
// for function families, n! <= 10^7 for permutation families.
bool oracle_in_budget(RelationClass c, std::size_t m, std::size_t n);

// Enumerates every member of c on (m, n) and tallies fixed/reflexive points.
// Workers split the index range into chunks and partial profiles are summed,
// so the result does not depend on jobs.  Throws BudgetError out of budget.
CountProfile oracle_profile(RelationClass c, std::size_t m, std::size_t n,
                            unsigned jobs = 1);

}  // namespace relcount
