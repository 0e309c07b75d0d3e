#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include <drcat/generators.hpp>
#include <drcat/partial_category.hpp>

namespace drcat {

namespace {

element at_label(PartialCategory const& c, std::string const& lab) {
  auto const it = std::find(c.labels.begin(), c.labels.end(), lab);
  REQUIRE(it != c.labels.end());
  return static_cast<element>(it - c.labels.begin());
}

// Two isolated identities: the discrete category on two objects.
PartialCategory discrete2() {
  PartialCategory c;
  c.n = 2;
  c.comp = {0, UNDEFINED, UNDEFINED, 1};
  c.d = {0, 1};
  c.r = {0, 1};
  return c;
}

}  // namespace

TEST_CASE("PartialCategory 01: discrete category passes and is a category",
          "[quick][pcat][01]") {
  auto const c = discrete2();
  auto const rep = check_partial_category(c);
  REQUIRE(rep.holds);
  REQUIRE(c.identity_elements() == std::vector<element>{0, 1});
  REQUIRE(is_category(c));
  REQUIRE(c.id_leq(0, 0));
  REQUIRE(!c.id_leq(0, 1));  // no order block: identities compare by equality
}

TEST_CASE("PartialCategory 02: composite with mismatched ends breaks PC2",
          "[quick][pcat][02]") {
  auto c = discrete2();
  c.comp[0 * 2 + 1] = 1;  // r(0) != d(1), yet the composite is defined
  auto const rep = check_partial_category(c);
  REQUIRE(!rep.holds);
  REQUIRE(std::any_of(rep.witnesses.begin(), rep.witnesses.end(),
                      [](Witness const& w) {
                        return w.law == "PC2"
                               && w.elems == std::vector<element>{0, 1};
                      }));
}

TEST_CASE("PartialCategory 03: interval category truncates composition",
          "[quick][pcat][03]") {
  auto const c = interval_partial_category(0, 6, 3);
  REQUIRE(c.n == 18);
  REQUIRE(check_partial_category(c).holds);
  REQUIRE(c.identity_elements().size() == 7);

  auto const a = at_label(c, "(2,4)");
  auto const b = at_label(c, "(4,6)");
  REQUIRE(c.r[a] == c.d[b]);        // ends match...
  REQUIRE(!c.defined(a, b));        // ...but (2,6) is too long to exist
  REQUIRE(!is_category(c));

  auto const s = at_label(c, "(2,3)");
  auto const t = at_label(c, "(3,4)");
  REQUIRE(c.defined(s, t));
  REQUIRE(c.at(s, t) == a);
}

TEST_CASE("PartialCategory 04: posetal category of a chain is a category",
          "[quick][pcat][04]") {
  auto const c = posetal_category(chain_order(3));
  REQUIRE(c.n == 6);
  REQUIRE(check_partial_category(c).holds);
  REQUIRE(is_category(c));
  REQUIRE(c.labels[0] == "(0,0)");
  REQUIRE(c.labels[1] == "(0,1)");

  auto const a = at_label(c, "(0,1)");
  auto const b = at_label(c, "(1,2)");
  REQUIRE(c.at(a, b) == at_label(c, "(0,2)"));
}

TEST_CASE("PartialCategory 05: posetal construction accepts any quasiorder",
          "[quick][pcat][05]") {
  Relation two_cycle(2);
  two_cycle.set(0, 0, true);
  two_cycle.set(1, 1, true);
  two_cycle.set(0, 1, true);
  two_cycle.set(1, 0, true);
  auto const c = posetal_category(two_cycle);
  REQUIRE(c.n == 4);
  REQUIRE(check_partial_category(c).holds);
  REQUIRE(is_category(c));

  Relation not_transitive = Relation::identity(3);
  not_transitive.set(0, 1, true);
  not_transitive.set(1, 2, true);
  REQUIRE_THROWS_AS(posetal_category(not_transitive), NotPreorderError);
}

TEST_CASE("PartialCategory 06: interval equals a saturated posetal piece",
          "[quick][pcat][06]") {
  auto const whole = posetal_category(chain_order(7));
  std::vector<bool> members(whole.n, false);
  for (element i = 0; i < whole.n; ++i) {
    auto const& lab = whole.labels[i];
    auto const comma = lab.find(',');
    long const x = std::stol(lab.substr(1, comma - 1));
    long const y = std::stol(lab.substr(comma + 1));
    members[i] = (y - x) < 3;
  }
  auto const piece = saturated_restrict(whole, members);
  auto const direct = interval_partial_category(0, 6, 3);
  REQUIRE(piece.same_tables(direct));
  REQUIRE(piece.labels == direct.labels);
}

TEST_CASE("PartialCategory 07: non-saturated subsets are rejected",
          "[quick][pcat][07]") {
  auto const whole = posetal_category(chain_order(3));
  // Keep (0,0), (0,2), (2,2): the product (0,1) o (1,2) = (0,2) stays,
  // both factors leave.
  std::vector<bool> members{true, false, true, false, false, true};
  try {
    saturated_restrict(whole, members);
    FAIL("expected NotSaturatedError");
  } catch (NotSaturatedError const& e) {
    REQUIRE(e.a() == 1);
    REQUIRE(e.b() == 4);
    REQUIRE(e.product() == 2);
  }

  // Identities alone are saturated and give the discrete category.
  std::vector<bool> ids{true, false, false, true, false, true};
  auto const piece = saturated_restrict(whole, ids);
  REQUIRE(piece.n == 3);
  REQUIRE(is_category(piece));
  REQUIRE(piece.labels == std::vector<std::string>{"(0,0)", "(1,1)", "(2,2)"});
}

TEST_CASE("PartialCategory 08: path category of a short chain",
          "[quick][pcat][08]") {
  Digraph g;
  g.num_vertices = 3;
  g.edges = {{0, 1}, {1, 2}};

  auto const c = path_category_truncation(g, 2);
  REQUIRE(c.n == 6);
  REQUIRE(check_partial_category(c).holds);
  auto const ab = at_label(c, "0-1");
  auto const bc = at_label(c, "1-2");
  REQUIRE(c.at(ab, bc) == at_label(c, "0-1-2"));
  REQUIRE(c.d[ab] == at_label(c, "0"));
  REQUIRE(c.r[ab] == at_label(c, "1"));

  auto const shallow = path_category_truncation(g, 1);
  REQUIRE(shallow.n == 5);
  REQUIRE(check_partial_category(shallow).holds);
  REQUIRE(!is_category(shallow));  // ends of 0-1 and 1-2 match, no composite
}

TEST_CASE("PartialCategory 09: loop digraph truncates at the length bound",
          "[quick][pcat][09]") {
  Digraph g;
  g.num_vertices = 1;
  g.edges = {{0, 0}};
  auto const c = path_category_truncation(g, 3);
  REQUIRE(c.n == 4);  // lengths 0..3
  REQUIRE(check_partial_category(c).holds);
  REQUIRE(!is_category(c));

  auto const one = at_label(c, "0-0");
  auto const two = at_label(c, "0-0-0");
  auto const three = at_label(c, "0-0-0-0");
  REQUIRE(c.at(one, two) == three);
  REQUIRE(!c.defined(two, two));
}

TEST_CASE("PartialCategory 10: identity order block must be a partial order",
          "[quick][pcat][10]") {
  auto c = discrete2();
  Relation ord(2);
  ord.set(0, 0, true);
  ord.set(1, 1, true);
  ord.set(0, 1, true);
  c.id_order = ord;
  REQUIRE(check_partial_category(c).holds);
  REQUIRE(c.id_leq(0, 1));

  // An entry on a non-identity row would be rejected; here we break
  // antisymmetry instead.
  c.id_order->set(1, 0, true);
  auto const rep = check_partial_category(c);
  REQUIRE(!rep.holds);
  REQUIRE(rep.witnesses.front().law == "idorder-partial-order");
}

}  // namespace drcat
