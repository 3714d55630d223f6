#include <doctest.h>

#include <stdexcept>

#include "relcount/relation.hpp"

using namespace relcount;

TEST_CASE("membership predicates") {
  CHECK(is_member(Relation::identity(3), RelationClass::Involution));
  CHECK(is_member(Relation(2, 2), RelationClass::TransitivePartialFunction));
  CHECK_FALSE(is_member(Relation::from_pairs(2, 2, {{0, 1}, {1, 0}, {1, 1}}),
                        RelationClass::Function));

  Relation swap2 = Relation::from_pairs(2, 2, {{0, 1}, {1, 0}});
  CHECK(is_member(swap2, RelationClass::Permutation));
  CHECK(is_member(swap2, RelationClass::Involution));
  CHECK_FALSE(is_member(swap2, RelationClass::IdempotentFunction));

  Relation constant = Relation::from_pairs(2, 2, {{0, 0}, {1, 0}});
  CHECK(is_member(constant, RelationClass::IdempotentFunction));
  CHECK_FALSE(is_member(constant, RelationClass::Permutation));

  // 3-cycle: a permutation that is neither an involution nor transitive
  Relation cycle = Relation::from_pairs(3, 3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(is_member(cycle, RelationClass::Permutation));
  CHECK_FALSE(is_member(cycle, RelationClass::Involution));
  CHECK_FALSE(is_member(cycle, RelationClass::TransitivePartialFunction));

  CHECK_THROWS_AS(is_member(Relation(2, 3), RelationClass::Permutation),
                  std::invalid_argument);
}

TEST_CASE("every class contains the identity relation") {
  Relation id = Relation::identity(4);
  for (RelationClass c : kAllClasses) CHECK(is_member(id, c));
}

TEST_CASE("reflexive point count") {
  CHECK(reflexive_point_count(Relation::identity(4)) == 4);
  CHECK(reflexive_point_count(Relation(3, 3)) == 0);
  CHECK(reflexive_point_count(Relation::full(2, 3)) == 2);
}

TEST_CASE("out-domain count") {
  CHECK(out_domain_count(Relation(3, 3)) == 3);
  CHECK(out_domain_count(Relation::identity(3)) == 0);
  CHECK(out_domain_count(Relation::from_pairs(2, 2, {{0, 0}})) == 1);
  CHECK_THROWS_AS(out_domain_count(Relation::full(2, 2)), std::invalid_argument);
}

TEST_CASE("composition") {
  Relation cycle = Relation::from_pairs(3, 3, {{0, 1}, {1, 2}, {2, 0}});
  Relation twice = cycle.compose(cycle);
  CHECK(twice == Relation::from_pairs(3, 3, {{0, 2}, {1, 0}, {2, 1}}));
  CHECK(twice.compose(cycle) == Relation::identity(3));
  CHECK(Relation(3, 3).compose(Relation::full(3, 3)) == Relation(3, 3));
  CHECK(Relation::identity(3).subset_of(Relation::full(3, 3)));
  CHECK_FALSE(Relation::full(3, 3).subset_of(Relation::identity(3)));
}

TEST_CASE("class name round trip") {
  for (RelationClass c : kAllClasses) CHECK(parse_class(class_name(c)) == c);
  CHECK_FALSE(parse_class("no-such-class").has_value());
}
