#include "relcount/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <thread>

namespace relcount {
namespace {

constexpr std::uint64_t kMaxRelationBits = 25;   // 2^(m*n) <= 2^25
constexpr std::uint64_t kMaxFamilySize = 10'000'000;

// Per-worker tallies; merged pointwise into the final profile.
struct Tally {
  std::vector<std::uint64_t> by_k;
  std::vector<std::vector<std::uint64_t>> by_kl;

  Tally(std::size_t m, std::size_t n, bool with_kl) : by_k(m + 1, 0) {
    if (with_kl) by_kl.assign(m + 1, std::vector<std::uint64_t>(n + 1, 0));
  }
  void add(const Relation& r, bool with_kl) {
    std::size_t k = reflexive_point_count(r);
    by_k[k] += 1;
    if (with_kl) by_kl[k][out_domain_count(r)] += 1;
  }
};

std::uint64_t factorial_u64(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

// Lexicographically rank-th permutation of [0..n-1] (factorial number system).
std::vector<std::size_t> unrank_permutation(std::uint64_t rank, std::size_t n) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::size_t> perm;
  perm.reserve(n);
  for (std::size_t i = n; i > 0; --i) {
    std::uint64_t f = factorial_u64(i - 1);
    std::size_t d = static_cast<std::size_t>(rank / f);
    rank %= f;
    perm.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return perm;
}

enum class Family { RelationBits, Choices, Permutations };

Family family_of(RelationClass c) {
  switch (c) {
    case RelationClass::ArbitraryRelation:
    case RelationClass::TotalRelation:
      return Family::RelationBits;
    case RelationClass::Permutation:
    case RelationClass::Involution:
      return Family::Permutations;
    default:
      return Family::Choices;
  }
}

// Digit radix for the choice family: one digit per row, value n means an
// empty row (partial classes only).
std::size_t choice_radix(RelationClass c, std::size_t n) {
  switch (c) {
    case RelationClass::Function:
    case RelationClass::IdempotentFunction:
      return n;
    default:
      return n + 1;
  }
}

std::uint64_t family_size(RelationClass c, std::size_t m, std::size_t n) {
  switch (family_of(c)) {
    case Family::RelationBits:
      return 1ull << (m * n);
    case Family::Permutations:
      return factorial_u64(n);
    case Family::Choices: {
      std::uint64_t size = 1;
      for (std::size_t i = 0; i < m; ++i) size *= choice_radix(c, n);
      return size;
    }
  }
  return 0;
}

void check_budget(RelationClass c, std::size_t m, std::size_t n) {
  switch (family_of(c)) {
    case Family::RelationBits:
      if (m * n > kMaxRelationBits)
        throw BudgetError("oracle budget exceeded: m*n = " + std::to_string(m * n) +
                          " but 2^(m*n) must stay within 2^" + std::to_string(kMaxRelationBits));
      return;
    case Family::Permutations:
      if (n > 10)
        throw BudgetError("oracle budget exceeded: n! with n = " + std::to_string(n) +
                          " exceeds " + std::to_string(kMaxFamilySize));
      return;
    case Family::Choices: {
      std::uint64_t size = 1;
      std::size_t radix = choice_radix(c, n);
      for (std::size_t i = 0; i < m; ++i) {
        size *= radix;
        if (size > kMaxFamilySize)
          throw BudgetError("oracle budget exceeded: " + std::to_string(radix) + "^m with m = " +
                            std::to_string(m) + " exceeds " + std::to_string(kMaxFamilySize));
      }
      return;
    }
  }
}

void scan_relation_bits(RelationClass c, std::size_t m, std::size_t n,
                        std::uint64_t begin, std::uint64_t end, Tally& tally) {
  Relation r(m, n);
  std::uint64_t row_mask = (n == 64) ? ~0ull : (1ull << n) - 1;
  for (std::uint64_t v = begin; v < end; ++v) {
    for (std::size_t i = 0; i < m; ++i) r.set_row(i, (v >> (i * n)) & row_mask);
    if (is_member(r, c)) tally.add(r, false);
  }
}

void scan_choices(RelationClass c, std::size_t m, std::size_t n,
                  std::uint64_t begin, std::uint64_t end, Tally& tally) {
  const std::size_t radix = choice_radix(c, n);
  const bool with_kl = has_kl_profile(c);
  const bool filtered = c != RelationClass::Function && c != RelationClass::PartialFunction;

  std::vector<std::size_t> digits(m, 0);
  std::uint64_t v = begin;
  for (std::size_t i = 0; i < m; ++i) {
    digits[i] = v % radix;
    v /= radix;
  }
  Relation r(m, n);
  auto apply = [&](std::size_t i) {
    r.set_row(i, digits[i] == n ? 0 : (1ull << digits[i]));
  };
  for (std::size_t i = 0; i < m; ++i) apply(i);

  for (std::uint64_t idx = begin; idx < end; ++idx) {
    if (!filtered || is_member(r, c)) tally.add(r, with_kl);
    // odometer step
    for (std::size_t i = 0; i < m; ++i) {
      if (++digits[i] < radix) {
        apply(i);
        break;
      }
      digits[i] = 0;
      apply(i);
    }
  }
}

void scan_permutations(RelationClass c, std::size_t n,
                       std::uint64_t begin, std::uint64_t end, Tally& tally) {
  std::vector<std::size_t> perm = unrank_permutation(begin, n);
  Relation r(n, n);
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    for (std::size_t i = 0; i < n; ++i) r.set_row(i, 1ull << perm[i]);
    if (c == RelationClass::Permutation || is_member(r, c)) tally.add(r, false);
    std::next_permutation(perm.begin(), perm.end());
  }
}

}  // namespace

Nat CountProfile::total() const {
  Nat sum = 0;
  for (const Nat& v : by_k) sum += v;
  return sum;
}

bool oracle_in_budget(RelationClass c, std::size_t m, std::size_t n) {
  try {
    check_budget(c, m, n);
  } catch (const BudgetError&) {
    return false;
  }
  return true;
}

CountProfile oracle_profile(RelationClass c, std::size_t m, std::size_t n, unsigned jobs) {
  if (m > n) throw std::invalid_argument("oracle_profile: m must be <= n");
  if (is_homogeneous_only(c) && m != n)
    throw std::invalid_argument("oracle_profile: class requires m == n");
  check_budget(c, m, n);

  const std::uint64_t size = family_size(c, m, n);
  const bool with_kl = has_kl_profile(c);
  const Family fam = family_of(c);

  unsigned workers = std::max(1u, jobs);
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(size, 1)));

  std::vector<Tally> tallies(workers, Tally(m, n, with_kl));
  auto run = [&](unsigned w) {
    std::uint64_t begin = size * w / workers;
    std::uint64_t end = size * (w + 1) / workers;
    switch (fam) {
      case Family::RelationBits: scan_relation_bits(c, m, n, begin, end, tallies[w]); break;
      case Family::Choices: scan_choices(c, m, n, begin, end, tallies[w]); break;
      case Family::Permutations: scan_permutations(c, n, begin, end, tallies[w]); break;
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (std::thread& t : threads) t.join();
  }

  CountProfile profile;
  profile.m = m;
  profile.n = n;
  profile.by_k.assign(m + 1, 0);
  if (with_kl) profile.by_kl.assign(m + 1, std::vector<Nat>(n + 1, 0));
  for (const Tally& t : tallies) {
    for (std::size_t k = 0; k <= m; ++k) profile.by_k[k] += t.by_k[k];
    if (with_kl)
      for (std::size_t k = 0; k <= m; ++k)
        for (std::size_t l = 0; l <= n; ++l) profile.by_kl[k][l] += t.by_kl[k][l];
  }
  return profile;
}

}  // namespace relcount
