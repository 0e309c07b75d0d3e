#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include <drcat/conditions.hpp>
#include <drcat/esn.hpp>
#include <drcat/semigroup.hpp>

namespace drcat {

namespace {

BiunarySemigroup chain_semilattice(std::size_t n) {
  BiunarySemigroup s;
  s.n = n;
  s.mul.resize(n * n);
  s.d.resize(n);
  s.r.resize(n);
  for (element x = 0; x < n; ++x) {
    s.d[x] = x;
    s.r[x] = x;
    for (element y = 0; y < n; ++y) {
      s.mul[x * n + y] = std::min(x, y);
    }
  }
  return s;
}

BiunarySemigroup rectangular_band() {
  return BiunarySemigroup{4,
                          {0, 2, 2, 0, 3, 1, 1, 3, 0, 2, 2, 0, 3, 1, 1, 3},
                          {0, 1, 0, 1},
                          {0, 1, 1, 0},
                          {}};
}

// Wrap a partial category and an order into the checked bundle, storing
// the order's restriction to the identities as the id_order block.
AmplePartialCategory make_apc(PartialCategory pc, Relation order) {
  Relation idorder(pc.n);
  for (element e : pc.identity_elements()) {
    for (element f : pc.identity_elements()) {
      idorder.set(e, f, order.at(e, f));
    }
  }
  pc.id_order = std::move(idorder);
  return AmplePartialCategory{std::move(pc), std::move(order)};
}

// Two comparable identities and nothing else.
AmplePartialCategory apc_chain2() {
  PartialCategory pc;
  pc.n = 2;
  pc.comp = {0, UNDEFINED, UNDEFINED, 1};
  pc.d = {0, 1};
  pc.r = {0, 1};
  Relation order = Relation::identity(2);
  order.set(0, 1, true);
  return make_apc(std::move(pc), std::move(order));
}

// Identities {0, e, f} with 0 below both and e, f incomparable.
AmplePartialCategory apc_meet3() {
  PartialCategory pc;
  pc.n = 3;
  pc.comp.assign(9, UNDEFINED);
  for (element x = 0; x < 3; ++x) {
    pc.comp[x * 3 + x] = x;
  }
  pc.d = {0, 1, 2};
  pc.r = {0, 1, 2};
  Relation order = Relation::identity(3);
  order.set(0, 1, true);
  order.set(0, 2, true);
  return make_apc(std::move(pc), std::move(order));
}

// Identities {0, e, f} plus one arrow a : e -> f, with 0 below everything.
// Elements: 0, 1 = e, 2 = f, 3 = a.
AmplePartialCategory apc_arrow4() {
  PartialCategory pc;
  pc.n = 4;
  pc.comp.assign(16, UNDEFINED);
  for (element x = 0; x < 3; ++x) {
    pc.comp[x * 4 + x] = x;
  }
  pc.comp[1 * 4 + 3] = 3;  // e o a = a
  pc.comp[3 * 4 + 2] = 3;  // a o f = a
  pc.d = {0, 1, 2, 1};
  pc.r = {0, 1, 2, 2};
  Relation order = Relation::identity(4);
  order.set(0, 1, true);
  order.set(0, 2, true);
  order.set(0, 3, true);
  return make_apc(std::move(pc), std::move(order));
}

}  // namespace

TEST_CASE("Esn 01: derived category of a semilattice is diagonal",
          "[quick][esn][01]") {
  auto const s = chain_semilattice(3);
  auto const c = derive_cs(s);
  REQUIRE(c.pc.n == 3);
  for (element x = 0; x < 3; ++x) {
    for (element y = 0; y < 3; ++y) {
      REQUIRE(c.pc.defined(x, y) == (x == y));
    }
  }
  REQUIRE(c.order == natural_order(s));
  REQUIRE(check_apc(c).holds);
}

TEST_CASE("Esn 02: hand-built ample partial categories pass the axioms",
          "[quick][esn][02]") {
  for (auto const& c : {apc_chain2(), apc_meet3(), apc_arrow4()}) {
    auto const rep = check_apc(c);
    REQUIRE(rep.holds);
    REQUIRE(rep.internal_ok);
    REQUIRE(roundtrip_category(c).holds);
  }
}

TEST_CASE("Esn 03: dropping a comparability breaks the maximal-pair axiom",
          "[quick][esn][03]") {
  auto c = apc_arrow4();
  c.order.set(0, 3, false);  // 0 no longer below the arrow
  auto const rep = check_apc(c);
  REQUIRE(!rep.holds);
  REQUIRE(std::any_of(rep.witnesses.begin(), rep.witnesses.end(),
                      [](Witness const& w) { return w.law == "APC5"; }));
}

TEST_CASE("Esn 04: restriction and corestriction on the arrow fixture",
          "[quick][esn][04]") {
  auto const c = apc_arrow4();
  REQUIRE(restriction(c, 1, 3) == 3);   // e|a = a
  REQUIRE(restriction(c, 0, 3) == 0);   // 0|a = 0
  REQUIRE(corestriction(c, 3, 2) == 3); // a|f = a
  REQUIRE(corestriction(c, 3, 0) == 0);

  REQUIRE_THROWS_AS(restriction(c, 3, 1), PreconditionError);  // not an identity
  REQUIRE_THROWS_AS(restriction(c, 2, 3), PreconditionError);  // f not below d(a)
}

TEST_CASE("Esn 05: matching term picks the largest composable identity",
          "[quick][esn][05]") {
  auto const c = apc_arrow4();
  REQUIRE(matching_term(c, 3, 2) == 2);  // a against f composes at f
  REQUIRE(matching_term(c, 1, 2) == 0);  // e against f only meet at 0
  REQUIRE(matching_term(c, 1, 3) == 1);  // e against a composes at e

  // In a derived category the matching term is R(D(xy) x).
  auto const base = chain_semilattice(3);
  for (auto const& s :
       {base, *derive_dr_from_e(3, base.mul, {0, 2}).semigroup}) {
    auto const cs = derive_cs(s);
    for (element x = 0; x < s.n; ++x) {
      for (element y = 0; y < s.n; ++y) {
        auto const expected =
            s.r[s.product(s.d[s.product(x, y)], x)];
        REQUIRE(matching_term(cs, x, y) == expected);
      }
    }
  }
}

TEST_CASE("Esn 06: pseudoproduct of comparable identities is the meet",
          "[quick][esn][06]") {
  auto const s = pseudoproduct_semigroup(apc_chain2());
  REQUIRE(s.mul == std::vector<element>{0, 0, 0, 1});
  REQUIRE(s.d == std::vector<element>{0, 1});
  REQUIRE(check_dr_axioms(s).holds);
  REQUIRE(check_ample(s).holds);
}

TEST_CASE("Esn 07: pseudoproduct of the arrow fixture", "[quick][esn][07]") {
  auto const s = pseudoproduct_semigroup(apc_arrow4());
  REQUIRE(s.product(1, 3) == 3);  // e (*) a = a
  REQUIRE(s.product(3, 2) == 3);  // a (*) f = a
  REQUIRE(s.product(3, 3) == 0);  // ends do not meet, falls to the zero
  REQUIRE(s.product(1, 2) == 0);
  REQUIRE(check_dr_axioms(s).holds);
  REQUIRE(check_ample(s).holds);
  REQUIRE(standard_order(s) == apc_arrow4().order);
}

TEST_CASE("Esn 08: round-trips recover semigroup and category",
          "[quick][esn][08]") {
  auto const base = chain_semilattice(3);
  BiunarySemigroup const z2{2, {0, 1, 1, 0}, {0, 0}, {0, 0}, {}};
  for (auto const& s :
       {base, *derive_dr_from_e(3, base.mul, {0, 2}).semigroup, z2}) {
    REQUIRE(roundtrip_semigroup(s).holds);
    REQUIRE(roundtrip_category(derive_cs(s)).holds);
  }
}

TEST_CASE("Esn 09: non-ample input is a stated precondition failure",
          "[quick][esn][09]") {
  auto const band = rectangular_band();
  REQUIRE_THROWS_AS(derive_cs(band), PreconditionError);
  auto const rep = roundtrip_semigroup(band);
  REQUIRE(rep.precondition_failed);
  REQUIRE(!rep.holds);
}

TEST_CASE("Esn 10: semigroup morphism check", "[quick][esn][10]") {
  auto const s = chain_semilattice(3);
  REQUIRE(is_dr_morphism({0, 1, 2}, s, s).holds);

  auto const bad = is_dr_morphism({1, 0, 2}, s, s);
  REQUIRE(!bad.holds);
  REQUIRE(std::any_of(bad.witnesses.begin(), bad.witnesses.end(),
                      [](Witness const& w) {
                        return w.law == "morphism-mul"
                               && w.elems == std::vector<element>{0, 1};
                      }));
}

TEST_CASE("Esn 11: functor check needs the matching-term bullet",
          "[quick][esn][11]") {
  // Collapsing the two incomparable identities onto the top of a 2-chain
  // preserves d, r, composition and order, yet moves the matching term of
  // (e, f) from 0 up to the top.
  auto const from = apc_meet3();
  auto const to = apc_chain2();
  auto const rep = is_ample_functor({0, 1, 1}, from, to);
  REQUIRE(!rep.holds);
  REQUIRE(!rep.witnesses.empty());
  for (auto const& w : rep.witnesses) {
    REQUIRE(w.law == "functor-matching");
  }
  REQUIRE(std::any_of(rep.witnesses.begin(), rep.witnesses.end(),
                      [](Witness const& w) {
                        return w.elems == std::vector<element>{1, 2};
                      }));

  // Relabelling the incomparable identities is a functor.
  REQUIRE(is_ample_functor({0, 2, 1}, from, from).holds);
  auto const arrow = apc_arrow4();
  REQUIRE(is_ample_functor({0, 1, 2, 3}, arrow, arrow).holds);
}

}  // namespace drcat
