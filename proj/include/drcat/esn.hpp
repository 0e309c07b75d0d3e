#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "conditions.hpp"
#include "partial_category.hpp"
#include "relation.hpp"
#include "report.hpp"
#include "semigroup.hpp"
#include "types.hpp"

namespace drcat {

// A partial category together with a partial order on all of its
// elements.  The laws APC1-APC8 (see check_apc) make it "ample": exactly
// the structures arising as C(S) for a DR-semigroup S satisfying the
// ample conditions.
struct AmplePartialCategory {
  PartialCategory pc;
  Relation order;

  bool leq(element x, element y) const { return order.at(x, y); }
};

namespace detail {

inline void describe_first_witness(CheckReport const& rep, std::string& out) {
  if (!rep.witnesses.empty()) {
    out += " (" + rep.witnesses.front().law + " at";
    for (element e : rep.witnesses.front().elems) {
      out += " " + std::to_string(e);
    }
    out += ")";
  }
}

inline void require_dr_and_ample(BiunarySemigroup const& s,
                                 std::string const& who) {
  auto dr = check_dr_axioms(s, CheckOptions{1});
  if (!dr.holds) {
    throw PreconditionError(who + ": structure fails the DR axioms");
  }
  auto amp = check_ample(s, CheckOptions{1});
  if (!amp.holds) {
    std::string msg = who + ": structure fails the ample conditions";
    describe_first_witness(amp, msg);
    throw PreconditionError(msg);
  }
}

}  // namespace detail

// The (cat,trace)-product: keep x*y exactly when R(x) = D(y), D(xy) = D(x)
// and R(xy) = R(y).  On a structure satisfying the ample conditions this
// is a partial category with the same D and R; its identity order is the
// natural order on the projections.
// Pre: s passes check_dr_axioms and check_ample.
inline PartialCategory cat_trace_product(BiunarySemigroup const& s) {
  detail::require_dr_and_ample(s, "cat_trace_product");
  PartialCategory c;
  c.n = s.n;
  c.comp.assign(c.n * c.n, UNDEFINED);
  c.d = s.d;
  c.r = s.r;
  c.labels = s.labels;
  c.id_order = natural_order(s);
  element const n = static_cast<element>(s.n);
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      if (cat_pred(s, x, y) && trace_pred(s, x, y)) {
        c.comp[x * c.n + y] = s.product(x, y);
      }
    }
  }
  return c;
}

// C(S): the (cat,trace)-product together with the standard order (the
// common refinement <=_r = <=_l).  Pre: as cat_trace_product.
inline AmplePartialCategory derive_cs(BiunarySemigroup const& s) {
  AmplePartialCategory out{cat_trace_product(s), Relation{}};
  out.order = standard_order(s);
  return out;
}

namespace detail {

// All pairs (a,b) with a <= x, b <= y and a o b defined, then the one
// dominating every other in both coordinates, if any.
inline std::optional<std::pair<element, element>> maximal_composable_pair(
    PartialCategory const& c, Relation const& order, element x, element y) {
  std::vector<std::pair<element, element>> cand;
  element const n = static_cast<element>(c.n);
  for (element a = 0; a < n; ++a) {
    if (!order.at(a, x)) {
      continue;
    }
    for (element b = 0; b < n; ++b) {
      if (order.at(b, y) && c.defined(a, b)) {
        cand.emplace_back(a, b);
      }
    }
  }
  for (auto const& m : cand) {
    bool top = true;
    for (auto const& k : cand) {
      if (!order.at(k.first, m.first) || !order.at(k.second, m.second)) {
        top = false;
        break;
      }
    }
    if (top) {
      return m;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// The defining laws of an ample partial category:
//   APC1  (C, o, d, r) is a partial category
//   APC2  <= is a partial order on all elements
//   APC3  composition is monotone where defined
//   APC4  d and r are monotone
//   APC5  every pair x, y has a largest composable pair below it
//   APC6  x <= y and d(x) = d(y) imply x = y
//   APC7  x <= y and r(x) = r(y) imply x = y
//   APC8  any w <= x o y splits as w = x' o y' with x' <= x, y' <= y
//
// If the category carries an explicit identity order it must agree with
// the restriction of <= to the identities (law idorder-consistent).
//
// When all laws hold, theorem-level consequences (identities form an
// order ideal and a meet semilattice, comparability, uniqueness of
// restrictions and of APC8 splittings) are verified under internal_ok.
inline CheckReport check_apc(PartialCategory const& c, Relation const& order,
                             CheckOptions opts = {}) {
  if (order.size() != c.n) {
    return CheckReport::precondition("apc", "order relation size mismatch");
  }
  CheckReport rep("apc");
  auto pc_rep = check_partial_category(c, opts);
  rep.checked += pc_rep.checked;
  rep.failure_count += pc_rep.failure_count;
  if (!pc_rep.holds) {
    rep.holds = false;
    for (auto& w : pc_rep.witnesses) {
      if (rep.witnesses.size() < opts.max_witnesses) {
        rep.witnesses.push_back({"APC1:" + w.law, w.elems});
      }
    }
  }
  element const n = static_cast<element>(c.n);
  // APC2
  for (element x = 0; x < n; ++x) {
    ++rep.checked;
    if (!order.at(x, x)) {
      rep.fail("APC2-reflexive", {x}, opts.max_witnesses);
    }
  }
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      if (x != y && order.at(x, y) && order.at(y, x)) {
        rep.fail("APC2-antisymmetric", {x, y}, opts.max_witnesses);
      }
      if (!order.at(x, y)) {
        continue;
      }
      for (element z = 0; z < n; ++z) {
        if (order.at(y, z) && !order.at(x, z)) {
          rep.fail("APC2-transitive", {x, y, z}, opts.max_witnesses);
        }
      }
    }
  }
  if (!rep.holds) {
    // The remaining laws presuppose a partial category and a partial
    // order; stop at the first broken layer to keep witnesses readable.
    return rep;
  }
  if (c.id_order) {
    auto const ids = c.identity_elements();
    for (element e : ids) {
      for (element f : ids) {
        ++rep.checked;
        if (c.id_order->at(e, f) != order.at(e, f)) {
          rep.fail("idorder-consistent", {e, f}, opts.max_witnesses);
        }
      }
    }
  }
  // APC3
  for (element s1 = 0; s1 < n; ++s1) {
    for (element s2 = 0; s2 < n; ++s2) {
      if (!order.at(s1, s2)) {
        continue;
      }
      for (element t1 = 0; t1 < n; ++t1) {
        if (!c.defined(s1, t1)) {
          continue;
        }
        for (element t2 = 0; t2 < n; ++t2) {
          if (!order.at(t1, t2) || !c.defined(s2, t2)) {
            continue;
          }
          ++rep.checked;
          if (!order.at(c.at(s1, t1), c.at(s2, t2))) {
            rep.fail("APC3", {s1, t1, s2, t2}, opts.max_witnesses);
          }
        }
      }
    }
  }
  // APC4, APC6, APC7
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      if (!order.at(x, y)) {
        continue;
      }
      ++rep.checked;
      if (!order.at(c.d[x], c.d[y])) {
        rep.fail("APC4-D", {x, y}, opts.max_witnesses);
      }
      ++rep.checked;
      if (!order.at(c.r[x], c.r[y])) {
        rep.fail("APC4-R", {x, y}, opts.max_witnesses);
      }
      ++rep.checked;
      if (x != y && c.d[x] == c.d[y]) {
        rep.fail("APC6", {x, y}, opts.max_witnesses);
      }
      ++rep.checked;
      if (x != y && c.r[x] == c.r[y]) {
        rep.fail("APC7", {x, y}, opts.max_witnesses);
      }
    }
  }
  // APC5
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      ++rep.checked;
      if (!detail::maximal_composable_pair(c, order, x, y)) {
        rep.fail("APC5", {x, y}, opts.max_witnesses);
      }
    }
  }
  // APC8
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      if (!c.defined(x, y)) {
        continue;
      }
      element const z = c.at(x, y);
      for (element w = 0; w < n; ++w) {
        if (!order.at(w, z)) {
          continue;
        }
        ++rep.checked;
        std::size_t splits = 0;
        for (element a = 0; a < n && splits < 2; ++a) {
          if (!order.at(a, x)) {
            continue;
          }
          for (element b = 0; b < n; ++b) {
            if (order.at(b, y) && c.defined(a, b) && c.at(a, b) == w) {
              if (++splits == 2) {
                break;
              }
            }
          }
        }
        if (splits == 0) {
          rep.fail("APC8", {x, y, w}, opts.max_witnesses);
        } else if (splits > 1) {
          rep.fail_internal("APC8-unique-split", {x, y, w},
                            opts.max_witnesses);
        }
      }
    }
  }
  if (!rep.holds) {
    return rep;
  }
  // Consequences, all theorems once APC1-APC8 hold.
  auto const ids = c.identity_elements();
  std::vector<bool> is_id(c.n, false);
  for (element e : ids) {
    is_id[e] = true;
  }
  for (element x = 0; x < n; ++x) {
    for (element e : ids) {
      if (order.at(x, e) && !is_id[x]) {
        rep.fail_internal("identities-order-ideal", {x, e},
                          opts.max_witnesses);
      }
    }
  }
  for (element z = 0; z < n; ++z) {
    for (element x = 0; x < n; ++x) {
      if (!order.at(x, z)) {
        continue;
      }
      for (element y = 0; y < n; ++y) {
        if (!order.at(y, z)) {
          continue;
        }
        if (order.at(c.d[x], c.d[y]) && !order.at(x, y)) {
          rep.fail_internal("comparability-D", {x, y, z}, opts.max_witnesses);
        }
        if (order.at(c.r[x], c.r[y]) && !order.at(x, y)) {
          rep.fail_internal("comparability-R", {x, y, z}, opts.max_witnesses);
        }
      }
    }
  }
  for (element e : ids) {
    for (element f : ids) {
      auto const mp = detail::maximal_composable_pair(c, order, e, f);
      // Identities compose only with themselves, so the maximal pair is
      // diagonal and computes the meet of e and f.
      if (!mp || mp->first != mp->second || !is_id[mp->first]) {
        rep.fail_internal("identity-meet", {e, f}, opts.max_witnesses);
      }
    }
  }
  return rep;
}

inline CheckReport check_apc(AmplePartialCategory const& c,
                             CheckOptions opts = {}) {
  return check_apc(c.pc, c.order, opts);
}

namespace detail {

inline void require_apc(AmplePartialCategory const& c, std::string const& who) {
  auto rep = check_apc(c, CheckOptions{1});
  if (!rep.holds) {
    std::string msg = who + ": not an ample partial category";
    describe_first_witness(rep, msg);
    throw PreconditionError(msg);
  }
}

}  // namespace detail

// Restriction e|y: the unique x <= y with d(x) = e, when it exists.
// Pre: c passes check_apc, e is an identity and e <= d(y).
inline std::optional<element> restriction(AmplePartialCategory const& c,
                                          element e, element y) {
  if (c.pc.d[e] != e) {
    throw PreconditionError("restriction: e is not an identity");
  }
  if (!c.leq(e, c.pc.d[y])) {
    throw PreconditionError("restriction: e is not below d(y)");
  }
  std::optional<element> found;
  for (element x = 0; x < c.pc.n; ++x) {
    if (c.leq(x, y) && c.pc.d[x] == e) {
      if (found) {
        throw std::logic_error("restriction: two elements below y share a "
                               "domain; not an ample partial category");
      }
      found = x;
    }
  }
  return found;
}

// Corestriction y|e: the unique x <= y with r(x) = e, when it exists.
// Pre: c passes check_apc, e is an identity and e <= r(y).
inline std::optional<element> corestriction(AmplePartialCategory const& c,
                                            element y, element e) {
  if (c.pc.d[e] != e) {
    throw PreconditionError("corestriction: e is not an identity");
  }
  if (!c.leq(e, c.pc.r[y])) {
    throw PreconditionError("corestriction: e is not below r(y)");
  }
  std::optional<element> found;
  for (element x = 0; x < c.pc.n; ++x) {
    if (c.leq(x, y) && c.pc.r[x] == e) {
      if (found) {
        throw std::logic_error("corestriction: two elements below y share a "
                               "range; not an ample partial category");
      }
      found = x;
    }
  }
  return found;
}

// The matching term of (x, y): the largest identity e such that the
// corestriction x|e and the restriction e|y exist and compose.  Equals
// r(x') for the APC5 maximal pair (x', y'); in C(S) it is R(D(xy)x).
// Pre: c passes check_apc.
inline element matching_term(AmplePartialCategory const& c, element x,
                             element y) {
  auto const ids = c.pc.identity_elements();
  std::vector<element> cand;
  for (element e : ids) {
    if (!c.leq(e, c.pc.r[x]) || !c.leq(e, c.pc.d[y])) {
      continue;
    }
    auto const xe = corestriction(c, x, e);
    auto const ey = restriction(c, e, y);
    if (xe && ey && c.pc.defined(*xe, *ey)) {
      cand.push_back(e);
    }
  }
  for (element m : cand) {
    bool top = true;
    for (element e : cand) {
      if (!c.leq(e, m)) {
        top = false;
        break;
      }
    }
    if (top) {
      return m;
    }
  }
  throw std::logic_error(
      "matching_term: no largest matching identity; not an ample partial "
      "category");
}

// S(C): the pseudoproduct x (*) y = x' o y' over the APC5 maximal pair,
// with the same d and r.  Pre: c passes check_apc.  The result satisfies
// the DR axioms and the ample conditions, and its standard order is the
// order of c.
inline BiunarySemigroup pseudoproduct_semigroup(AmplePartialCategory const& c) {
  detail::require_apc(c, "pseudoproduct_semigroup");
  BiunarySemigroup s;
  s.n = c.pc.n;
  s.mul.resize(s.n * s.n);
  s.d = c.pc.d;
  s.r = c.pc.r;
  s.labels = c.pc.labels;
  element const n = static_cast<element>(s.n);
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      auto const mp = detail::maximal_composable_pair(c.pc, c.order, x, y);
      if (!mp) {
        throw std::logic_error("pseudoproduct_semigroup: APC5 pair missing");
      }
      s.mul[x * s.n + y] = c.pc.at(mp->first, mp->second);
    }
  }
  return s;
}

// S(C(S)) = S: the pseudoproduct of the derived category recovers the
// multiplication (and D, R) exactly, on the same carrier.
inline CheckReport roundtrip_semigroup(BiunarySemigroup const& s,
                                       CheckOptions opts = {}) {
  {
    auto dr = check_dr_axioms(s, CheckOptions{1});
    if (!dr.holds) {
      return CheckReport::precondition("roundtrip-semigroup",
                                       "structure fails the DR axioms");
    }
    auto amp = check_ample(s, CheckOptions{1});
    if (!amp.holds) {
      return CheckReport::precondition("roundtrip-semigroup",
                                       "structure fails the ample conditions");
    }
  }
  auto const c = derive_cs(s);
  auto const back = pseudoproduct_semigroup(c);
  CheckReport rep("roundtrip-semigroup");
  element const n = static_cast<element>(s.n);
  for (element x = 0; x < n; ++x) {
    ++rep.checked;
    if (back.d[x] != s.d[x]) {
      rep.fail("roundtrip-D", {x}, opts.max_witnesses);
    }
    ++rep.checked;
    if (back.r[x] != s.r[x]) {
      rep.fail("roundtrip-R", {x}, opts.max_witnesses);
    }
    for (element y = 0; y < n; ++y) {
      ++rep.checked;
      if (back.product(x, y) != s.product(x, y)) {
        rep.fail("roundtrip-mul", {x, y}, opts.max_witnesses);
      }
    }
  }
  return rep;
}

// C(S(C)) = C: deriving a category from the pseudoproduct semigroup
// recovers composition, d, r and the order exactly.
inline CheckReport roundtrip_category(AmplePartialCategory const& c,
                                      CheckOptions opts = {}) {
  if (!check_apc(c, CheckOptions{1}).holds) {
    return CheckReport::precondition("roundtrip-category",
                                     "not an ample partial category");
  }
  auto const s = pseudoproduct_semigroup(c);
  auto const back = derive_cs(s);
  CheckReport rep("roundtrip-category");
  element const n = static_cast<element>(c.pc.n);
  for (element x = 0; x < n; ++x) {
    ++rep.checked;
    if (back.pc.d[x] != c.pc.d[x]) {
      rep.fail("roundtrip-D", {x}, opts.max_witnesses);
    }
    ++rep.checked;
    if (back.pc.r[x] != c.pc.r[x]) {
      rep.fail("roundtrip-R", {x}, opts.max_witnesses);
    }
    for (element y = 0; y < n; ++y) {
      ++rep.checked;
      if (back.pc.at(x, y) != c.pc.at(x, y)) {
        rep.fail("roundtrip-comp", {x, y}, opts.max_witnesses);
      }
      ++rep.checked;
      if (back.order.at(x, y) != c.order.at(x, y)) {
        rep.fail("roundtrip-order", {x, y}, opts.max_witnesses);
      }
    }
  }
  return rep;
}

// A map between DR-semigroups preserving multiplication, D and R.
inline CheckReport is_dr_morphism(std::vector<element> const& map,
                                  BiunarySemigroup const& from,
                                  BiunarySemigroup const& to,
                                  CheckOptions opts = {}) {
  if (map.size() != from.n) {
    return CheckReport::precondition("dr-morphism", "map has wrong size");
  }
  for (element v : map) {
    if (v >= to.n) {
      return CheckReport::precondition("dr-morphism", "map value out of range");
    }
  }
  CheckReport rep("dr-morphism");
  element const n = static_cast<element>(from.n);
  for (element x = 0; x < n; ++x) {
    ++rep.checked;
    if (map[from.d[x]] != to.d[map[x]]) {
      rep.fail("morphism-D", {x}, opts.max_witnesses);
    }
    ++rep.checked;
    if (map[from.r[x]] != to.r[map[x]]) {
      rep.fail("morphism-R", {x}, opts.max_witnesses);
    }
    for (element y = 0; y < n; ++y) {
      ++rep.checked;
      if (map[from.product(x, y)] != to.product(map[x], map[y])) {
        rep.fail("morphism-mul", {x, y}, opts.max_witnesses);
      }
    }
  }
  return rep;
}

// A functor of ample partial categories: preserves defined composites,
// d and r, the order, and matching terms.  When it holds, preservation of
// APC5 maximal pairs is a consequence and is verified under internal_ok.
inline CheckReport is_ample_functor(std::vector<element> const& map,
                                    AmplePartialCategory const& from,
                                    AmplePartialCategory const& to,
                                    CheckOptions opts = {}) {
  if (!check_apc(from, CheckOptions{1}).holds
      || !check_apc(to, CheckOptions{1}).holds) {
    return CheckReport::precondition(
        "ample-functor", "source or target is not an ample partial category");
  }
  if (map.size() != from.pc.n) {
    return CheckReport::precondition("ample-functor", "map has wrong size");
  }
  for (element v : map) {
    if (v >= to.pc.n) {
      return CheckReport::precondition("ample-functor",
                                       "map value out of range");
    }
  }
  CheckReport rep("ample-functor");
  element const n = static_cast<element>(from.pc.n);
  for (element x = 0; x < n; ++x) {
    ++rep.checked;
    if (map[from.pc.d[x]] != to.pc.d[map[x]]) {
      rep.fail("functor-D", {x}, opts.max_witnesses);
    }
    ++rep.checked;
    if (map[from.pc.r[x]] != to.pc.r[map[x]]) {
      rep.fail("functor-R", {x}, opts.max_witnesses);
    }
    for (element y = 0; y < n; ++y) {
      if (from.pc.defined(x, y)) {
        ++rep.checked;
        if (!to.pc.defined(map[x], map[y])) {
          rep.fail("functor-comp-defined", {x, y}, opts.max_witnesses);
        } else if (map[from.pc.at(x, y)] != to.pc.at(map[x], map[y])) {
          rep.fail("functor-comp-value", {x, y}, opts.max_witnesses);
        }
      }
      ++rep.checked;
      if (from.leq(x, y) && !to.leq(map[x], map[y])) {
        rep.fail("functor-order", {x, y}, opts.max_witnesses);
      }
      ++rep.checked;
      if (map[matching_term(from, x, y)]
          != matching_term(to, map[x], map[y])) {
        rep.fail("functor-matching", {x, y}, opts.max_witnesses);
      }
    }
  }
  if (rep.holds) {
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        auto const mp =
            detail::maximal_composable_pair(from.pc, from.order, x, y);
        auto const mq = detail::maximal_composable_pair(to.pc, to.order,
                                                        map[x], map[y]);
        if (!mp || !mq || map[mp->first] != mq->first
            || map[mp->second] != mq->second) {
          rep.fail_internal("functor-maximal-pair", {x, y},
                            opts.max_witnesses);
        }
      }
    }
  }
  return rep;
}

}  // namespace drcat
