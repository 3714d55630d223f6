#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <vector>

namespace relcount {

enum class RelationClass {
  Function,
  PartialFunction,
  TotalRelation,
  ArbitraryRelation,
  Permutation,
  Involution,
  IdempotentFunction,
  IdempotentPartialFunction,
  TransitivePartialFunction,
};

inline constexpr std::array<RelationClass, 9> kAllClasses = {
    RelationClass::Function,
    RelationClass::PartialFunction,
    RelationClass::TotalRelation,
    RelationClass::ArbitraryRelation,
    RelationClass::Permutation,
    RelationClass::Involution,
    RelationClass::IdempotentFunction,
    RelationClass::IdempotentPartialFunction,
    RelationClass::TransitivePartialFunction,
};

// Permutation/Involution/Idempotent*/Transitive* are defined on a single set.
bool is_homogeneous_only(RelationClass c);

// Classes whose members carry a (fixed points, out-domain elements) profile.
bool has_kl_profile(RelationClass c);

std::string_view class_name(RelationClass c);
std::optional<RelationClass> parse_class(std::string_view name);

// Relation R between X (|X| = m) and Y (|Y| = n) with X identified with the
// first m elements of Y; bit (i, j) means (x_i, y_j) in R.  Rows are stored
// as n-bit masks, so n is limited to 64 — far above every enumeration budget.
class Relation {
 public:
  Relation(std::size_t m, std::size_t n);

  static Relation identity(std::size_t n);
  static Relation full(std::size_t m, std::size_t n);
  static Relation from_pairs(std::size_t m, std::size_t n,
                             std::initializer_list<std::pair<std::size_t, std::size_t>> pairs);

  std::size_t source_size() const { return m_; }
  std::size_t target_size() const { return n_; }

  bool contains(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1u; }
  void set(std::size_t i, std::size_t j, bool value = true);

  std::uint64_t row(std::size_t i) const { return rows_[i]; }
  void set_row(std::size_t i, std::uint64_t mask);

  bool is_univalent() const;  // every row has at most one bit
  bool is_total() const;      // every row has at least one bit

  // Composition this ; other, defined for homogeneous relations.
  Relation compose(const Relation& other) const;

  // True iff every pair of this is a pair of other.
  bool subset_of(const Relation& other) const;

  bool operator==(const Relation&) const = default;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<std::uint64_t> rows_;
};

// True iff r satisfies the defining predicate of c.  Rejects m != n for the
// homogeneous-only classes.
bool is_member(const Relation& r, RelationClass c);

// |{i < m : (i, i) in R}|.
std::size_t reflexive_point_count(const Relation& r);

// Number of all-zero rows; input must be univalent.
std::size_t out_domain_count(const Relation& r);

}  // namespace relcount
