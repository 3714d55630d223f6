#include "relcount/relation.hpp"

#include <bit>
#include <stdexcept>

namespace relcount {

bool is_homogeneous_only(RelationClass c) {
  switch (c) {
    case RelationClass::Permutation:
    case RelationClass::Involution:
    case RelationClass::IdempotentFunction:
    case RelationClass::IdempotentPartialFunction:
    case RelationClass::TransitivePartialFunction:
      return true;
    default:
      return false;
  }
}

bool has_kl_profile(RelationClass c) {
  return c == RelationClass::IdempotentPartialFunction ||
         c == RelationClass::TransitivePartialFunction;
}

std::string_view class_name(RelationClass c) {
  switch (c) {
    case RelationClass::Function: return "function";
    case RelationClass::PartialFunction: return "partial-function";
    case RelationClass::TotalRelation: return "total-relation";
    case RelationClass::ArbitraryRelation: return "relation";
    case RelationClass::Permutation: return "permutation";
    case RelationClass::Involution: return "involution";
    case RelationClass::IdempotentFunction: return "idempotent-function";
    case RelationClass::IdempotentPartialFunction: return "idempotent-partial-function";
    case RelationClass::TransitivePartialFunction: return "transitive-partial-function";
  }
  return "?";
}

std::optional<RelationClass> parse_class(std::string_view name) {
  for (RelationClass c : kAllClasses)
    if (class_name(c) == name) return c;
  return std::nullopt;
}

Relation::Relation(std::size_t m, std::size_t n) : m_(m), n_(n), rows_(m, 0) {
  if (m > n) throw std::invalid_argument("Relation: m must be <= n");
  if (n > 64) throw std::invalid_argument("Relation: n must be <= 64");
}

Relation Relation::identity(std::size_t n) {
  Relation r(n, n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

Relation Relation::full(std::size_t m, std::size_t n) {
  Relation r(m, n);
  std::uint64_t mask = n == 64 ? ~0ull : (1ull << n) - 1;
  for (std::size_t i = 0; i < m; ++i) r.rows_[i] = mask;
  return r;
}

Relation Relation::from_pairs(std::size_t m, std::size_t n,
                              std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
  Relation r(m, n);
  for (auto [i, j] : pairs) r.set(i, j);
  return r;
}

void Relation::set(std::size_t i, std::size_t j, bool value) {
  if (i >= m_ || j >= n_) throw std::out_of_range("Relation::set");
  if (value)
    rows_[i] |= 1ull << j;
  else
    rows_[i] &= ~(1ull << j);
}

void Relation::set_row(std::size_t i, std::uint64_t mask) {
  if (i >= m_) throw std::out_of_range("Relation::set_row");
  if (n_ < 64 && (mask >> n_) != 0) throw std::out_of_range("Relation::set_row: mask too wide");
  rows_[i] = mask;
}

bool Relation::is_univalent() const {
  for (std::uint64_t row : rows_)
    if (std::popcount(row) > 1) return false;
  return true;
}

bool Relation::is_total() const {
  for (std::uint64_t row : rows_)
    if (row == 0) return false;
  return true;
}

Relation Relation::compose(const Relation& other) const {
  if (m_ != n_ || other.m_ != other.n_ || n_ != other.n_)
    throw std::invalid_argument("Relation::compose: homogeneous relations of equal size required");
  Relation result(m_, n_);
  for (std::size_t i = 0; i < m_; ++i) {
    std::uint64_t row = rows_[i];
    std::uint64_t out = 0;
    while (row) {
      std::size_t j = std::countr_zero(row);
      row &= row - 1;
      out |= other.rows_[j];
    }
    result.rows_[i] = out;
  }
  return result;
}

bool Relation::subset_of(const Relation& other) const {
  if (m_ != other.m_ || n_ != other.n_)
    throw std::invalid_argument("Relation::subset_of: shapes differ");
  for (std::size_t i = 0; i < m_; ++i)
    if (rows_[i] & ~other.rows_[i]) return false;
  return true;
}

bool is_member(const Relation& r, RelationClass c) {
  if (is_homogeneous_only(c) && r.source_size() != r.target_size())
    throw std::invalid_argument("is_member: class requires a homogeneous relation");
  switch (c) {
    case RelationClass::ArbitraryRelation:
      return true;
    case RelationClass::TotalRelation:
      return r.is_total();
    case RelationClass::PartialFunction:
      return r.is_univalent();
    case RelationClass::Function:
      return r.is_univalent() && r.is_total();
    case RelationClass::Permutation: {
      if (!r.is_univalent() || !r.is_total()) return false;
      std::uint64_t seen = 0;
      for (std::size_t i = 0; i < r.source_size(); ++i) {
        if (seen & r.row(i)) return false;  // two sources share a target
        seen |= r.row(i);
      }
      return true;
    }
    case RelationClass::Involution:
      // R;R = I forces R to be a self-inverse permutation.
      return r.compose(r) == Relation::identity(r.source_size());
    case RelationClass::IdempotentFunction: {
      if (!r.is_univalent() || !r.is_total()) return false;
      return r.compose(r) == r;
    }
    case RelationClass::IdempotentPartialFunction:
      return r.is_univalent() && r.compose(r) == r;
    case RelationClass::TransitivePartialFunction:
      return r.is_univalent() && r.compose(r).subset_of(r);
  }
  return false;
}

std::size_t reflexive_point_count(const Relation& r) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < r.source_size(); ++i) count += r.contains(i, i);
  return count;
}

std::size_t out_domain_count(const Relation& r) {
  if (!r.is_univalent())
    throw std::invalid_argument("out_domain_count: relation is not univalent");
  std::size_t count = 0;
  for (std::size_t i = 0; i < r.source_size(); ++i) count += r.row(i) == 0;
  return count;
}

}  // namespace relcount
