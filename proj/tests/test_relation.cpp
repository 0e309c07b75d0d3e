#include <catch2/catch_amalgamated.hpp>

#include <drcat/generators.hpp>
#include <drcat/relation.hpp>

namespace drcat {

TEST_CASE("Relation 01: identity relation is a partial order",
          "[quick][relation][01]") {
  auto const q = Relation::identity(4);
  REQUIRE(q.count() == 4);
  REQUIRE(q.is_reflexive());
  REQUIRE(q.is_antisymmetric());
  REQUIRE(q.is_transitive());
  REQUIRE(q.is_partial_order());
}

TEST_CASE("Relation 02: chain and antichain orders", "[quick][relation][02]") {
  auto const chain = chain_order(4);
  REQUIRE(chain.is_partial_order());
  REQUIRE(chain.count() == 10);  // 4 + 3 + 2 + 1 comparable pairs
  REQUIRE(chain.at(0, 3));
  REQUIRE(!chain.at(3, 0));

  auto const anti = antichain_order(3);
  REQUIRE(anti == Relation::identity(3));
}

TEST_CASE("Relation 03: a two-cycle is a preorder but not a partial order",
          "[quick][relation][03]") {
  Relation q(2);
  q.set(0, 0, true);
  q.set(1, 1, true);
  q.set(0, 1, true);
  q.set(1, 0, true);
  REQUIRE(q.is_reflexive());
  REQUIRE(q.is_transitive());
  REQUIRE(!q.is_antisymmetric());
  REQUIRE(q.is_preorder());
  REQUIRE(!q.is_partial_order());
}

TEST_CASE("Relation 04: missing composite breaks transitivity",
          "[quick][relation][04]") {
  Relation q = Relation::identity(3);
  q.set(0, 1, true);
  q.set(1, 2, true);
  REQUIRE(!q.is_transitive());
  q.set(0, 2, true);
  REQUIRE(q.is_transitive());
  REQUIRE(q.is_partial_order());
}

TEST_CASE("Relation 05: partial order restricted to a domain",
          "[quick][relation][05]") {
  // Order lives on {0, 1} only; element 2 must relate to nothing.
  Relation q(3);
  q.set(0, 0, true);
  q.set(1, 1, true);
  q.set(0, 1, true);
  std::vector<element> const domain{0, 1};
  REQUIRE(q.is_partial_order_on(domain));

  Relation stray = q;
  stray.set(2, 2, true);
  REQUIRE(!stray.is_partial_order_on(domain));

  Relation missing(3);
  missing.set(0, 0, true);  // 1 not reflexive on the domain
  REQUIRE(!missing.is_partial_order_on(domain));
}

TEST_CASE("Relation 06: equality compares every entry",
          "[quick][relation][06]") {
  auto a = Relation::identity(3);
  auto b = Relation::identity(3);
  REQUIRE(a == b);
  b.set(0, 1, true);
  REQUIRE(a != b);
}

}  // namespace drcat
