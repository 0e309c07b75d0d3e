#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include <drcat/conditions.hpp>
#include <drcat/instances.hpp>

namespace drcat {

namespace {

bool has_witness(CheckReport const& rep, std::string const& law,
                 std::vector<element> const& elems) {
  return std::any_of(rep.witnesses.begin(), rep.witnesses.end(),
                     [&](Witness const& w) {
                       return w.law == law && w.elems == elems;
                     });
}

}  // namespace

TEST_CASE("Instances 01: identity closure gives D(T) = T",
          "[quick][instances][01]") {
  auto const s = closure_powerset(2, {0, 1, 2, 3});
  REQUIRE(s.n == 4);
  REQUIRE(s.labels[3] == "{0,1}");
  REQUIRE(check_dr_axioms(s).holds);
  REQUIRE(check_ample(s).holds);
  REQUIRE(check_congruence_conditions(s).holds);
  REQUIRE(check_projections_commute(s).holds);
}

TEST_CASE("Instances 02: a closure breaking the congruence conditions",
          "[quick][instances][02]") {
  // cl({}) = {}, cl({0}) = {0,1}, cl({1}) = {1}, cl({0,1}) = {0,1}.
  auto const s = closure_powerset(2, {0, 3, 2, 3});
  REQUIRE(check_dr_axioms(s).holds);
  REQUIRE(check_ample(s).holds);
  REQUIRE(check_generalized_ample(s).holds);

  // D({1} {0}) = cl({}) = {} but D({1} D({0})) = cl({1}) = {1}.
  auto const cong = check_congruence_conditions(s);
  REQUIRE(!cong.holds);
  REQUIRE(has_witness(cong, "congruence-D", {2, 1}));
}

TEST_CASE("Instances 03: constant closure", "[quick][instances][03]") {
  auto const s = closure_powerset(2, {0, 3, 3, 3});
  REQUIRE(check_dr_axioms(s).holds);
  REQUIRE(check_ample(s).holds);
}

TEST_CASE("Instances 04: closure operator validation",
          "[quick][instances][04]") {
  auto law_of = [](std::vector<std::uint32_t> const& cl) {
    try {
      closure_powerset(2, cl);
      return std::string("(accepted)");
    } catch (NotAClosureOperatorError const& e) {
      return e.law();
    }
  };
  REQUIRE(law_of({0, 0, 2, 3}) == "extensive");   // {0} maps below itself
  REQUIRE(law_of({0, 3, 2, 1}) == "idempotent");  // cl({0}) is not closed
  REQUIRE(law_of({2, 1, 2, 3}) == "monotone");    // {} above {0} after closing

  REQUIRE_THROWS_AS(closure_powerset(2, {0, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(closure_powerset(20, {}), CapExceeded);
}

TEST_CASE("Instances 05: down-set closure of a quasiorder",
          "[quick][instances][05]") {
  REQUIRE(down_set_closure(chain_order(2))
          == std::vector<std::uint32_t>{0, 1, 3, 3});
  REQUIRE(down_set_closure(antichain_order(2))
          == std::vector<std::uint32_t>{0, 1, 2, 3});
  REQUIRE_NOTHROW(closure_powerset(2, down_set_closure(chain_order(2))));

  Relation not_transitive = Relation::identity(3);
  not_transitive.set(0, 1, true);
  not_transitive.set(1, 2, true);
  REQUIRE_THROWS_AS(down_set_closure(not_transitive), NotPreorderError);
  REQUIRE_THROWS_AS(QuasiOrderedSet(3, not_transitive), NotPreorderError);
}

TEST_CASE("Instances 06: partial functions on a two-point antichain",
          "[quick][instances][06]") {
  // Strong preservation over an antichain forces injectivity: this is the
  // symmetric inverse monoid on two points.
  auto const pso = pso_semigroup(QuasiOrderedSet(2, antichain_order(2)));
  REQUIRE(pso.semigroup.n == 7);
  REQUIRE(check_dr_axioms(pso.semigroup).holds);
  REQUIRE(check_ample(pso.semigroup).holds);
  REQUIRE(check_congruence_conditions(pso.semigroup).holds);
  REQUIRE(projections(pso.semigroup).size() == 4);

  for (auto const& f : pso.maps) {
    std::set<element> seen;
    for (element a = 0; a < 2; ++a) {
      if (f[a] != UNDEFINED) {
        REQUIRE(seen.insert(f[a]).second);
      }
    }
  }
}

TEST_CASE("Instances 07: partial functions on a two-point chain",
          "[quick][instances][07]") {
  auto const pso = pso_semigroup(QuasiOrderedSet(2, chain_order(2)));
  REQUIRE(pso.semigroup.n == 6);
  REQUIRE(check_dr_axioms(pso.semigroup).holds);
  REQUIRE(check_ample(pso.semigroup).holds);
  // Projections are the identity restrictions to down-closed subsets.
  REQUIRE(projections(pso.semigroup).size() == 3);

  auto const larger = pso_semigroup(QuasiOrderedSet(3, antichain_order(3)));
  REQUIRE(larger.semigroup.n == 34);  // symmetric inverse monoid on 3 points
  REQUIRE(check_ample(larger.semigroup).holds);

  REQUIRE_THROWS_AS(pso_semigroup(QuasiOrderedSet(5, chain_order(5))),
                    CapExceeded);
}

TEST_CASE("Instances 08: identity restrictions copy the closure power set",
          "[quick][instances][08]") {
  for (auto const& q : {chain_order(2), antichain_order(2)}) {
    auto const pso = pso_semigroup(QuasiOrderedSet(2, q));
    auto const cp = closure_powerset(2, down_set_closure(q));
    std::vector<element> map;
    for (std::uint32_t mask = 0; mask < 4; ++mask) {
      map.push_back(pso.identity_restriction[mask]);
    }
    REQUIRE(is_dr_morphism(map, cp, pso.semigroup).holds);
    std::set<element> distinct(map.begin(), map.end());
    REQUIRE(distinct.size() == map.size());
  }
}

TEST_CASE("Instances 09: interval isometries break the congruence conditions",
          "[quick][instances][09]") {
  auto const sc = interval_isometry_instance();
  REQUIRE(sc.category.n == 45);
  REQUIRE(subset_label(sc.category, sc.f) == "{(1,3),(3,7)}");
  REQUIRE(subset_label(sc.category, sc.g) == "{(3,5),(7,9)}");
  REQUIRE(subset_label(sc.category, sc.fg) == "{(1,5)}");
  REQUIRE(subset_label(sc.category, sc.d_fg) == "{(1,1)}");
  REQUIRE(subset_label(sc.category, sc.d_f_dg) == "{(1,1),(3,3)}");
  REQUIRE(sc.d_fg != sc.d_f_dg);

  auto const& s = sc.induced.semigroup;
  REQUIRE(s.n == 16);
  REQUIRE(s.labels[sc.f_index] == "f");
  REQUIRE(s.labels[sc.g_index] == "g");
  REQUIRE(sc.induced.carriers[s.product(sc.f_index, sc.g_index)] == sc.fg);

  REQUIRE(check_dr_axioms(s).holds);
  REQUIRE(check_ample(s).holds);
  REQUIRE(check_generalized_ample(s).holds);

  auto const cong = check_congruence_conditions(s);
  REQUIRE(!cong.holds);
  REQUIRE(has_witness(cong, "congruence-D", {sc.f_index, sc.g_index}));

  // (f, g) composes end to end yet D(fg) loses the second domain piece,
  // so this member separates the cat condition from its trace form.
  REQUIRE(cat_pred(s, sc.f_index, sc.g_index));
  REQUIRE(!trace_pred(s, sc.f_index, sc.g_index));
  auto const cat = check_cat_semigroup(s);
  REQUIRE(!cat.holds);
  REQUIRE(has_witness(cat, "cat-semigroup", {sc.f_index, sc.g_index}));
}

TEST_CASE("Instances 10: induced projections are identity down-sets",
          "[quick][instances][10]") {
  auto const sc = interval_isometry_instance();
  auto const& s = sc.induced.semigroup;
  for (element i = 0; i < s.n; ++i) {
    auto const& carrier = sc.induced.carriers[s.d[i]];
    for (auto x = carrier.find_first(); x != Subset::npos;
         x = carrier.find_next(x)) {
      REQUIRE(sc.category.d[static_cast<element>(x)]
              == static_cast<element>(x));
    }
    // Every member is an isometry of the interval category.
    REQUIRE(is_partial_isometry(sc.category, sc.induced.carriers[i]));
  }
}

}  // namespace drcat
