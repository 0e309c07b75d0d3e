#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "relation.hpp"
#include "report.hpp"
#include "types.hpp"

namespace drcat {

// A finite partial category: a partial composition with domain/range maps.
// Identities are ordinary elements (the common image of d and r); there is
// no separate object sort.  The laws
//
//   PC1  d(x) o x = x = x o r(x)      (both defined)
//   PC2  x o y defined  =>  r(x) = d(y)
//   PC3  x o (y o z) defined  <=>  (x o y) o z defined, and then equal
//
// are established by check_partial_category.  id_order is an optional
// partial order on the identities; when absent, equality is used.
struct PartialCategory {
  std::size_t n = 0;
  std::vector<element> comp;  // n*n, UNDEFINED where missing
  std::vector<element> d;
  std::vector<element> r;
  std::optional<Relation> id_order;
  std::vector<std::string> labels;  // optional; size 0 or n

  bool defined(element x, element y) const {
    return comp[x * n + y] != UNDEFINED;
  }
  element at(element x, element y) const { return comp[x * n + y]; }
  element D(element x) const { return d[x]; }
  element R(element x) const { return r[x]; }

  std::string label(element x) const {
    return labels.empty() ? std::to_string(x) : labels[x];
  }

  // The identities, sorted: the union of the d- and r-images.
  std::vector<element> identity_elements() const {
    std::vector<bool> is_id(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      is_id[d[x]] = true;
      is_id[r[x]] = true;
    }
    std::vector<element> out;
    for (element e = 0; e < n; ++e) {
      if (is_id[e]) {
        out.push_back(e);
      }
    }
    return out;
  }

  // Order on identities; defaults to equality when no id_order is given.
  bool id_leq(element e, element f) const {
    return id_order ? id_order->at(e, f) : e == f;
  }

  bool same_tables(PartialCategory const& other) const {
    return n == other.n && comp == other.comp && d == other.d && r == other.r;
  }

  void validate_shape() const {
    if (comp.size() != n * n || d.size() != n || r.size() != n) {
      throw std::invalid_argument("partial category: table size mismatch");
    }
    for (element v : comp) {
      if (v != UNDEFINED && v >= n) {
        throw std::invalid_argument("partial category: comp entry out of range");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i] >= n || r[i] >= n) {
        throw std::invalid_argument("partial category: d/r entry out of range");
      }
    }
    if (id_order && id_order->size() != n) {
      throw std::invalid_argument("partial category: id order size mismatch");
    }
    if (!labels.empty() && labels.size() != n) {
      throw std::invalid_argument("partial category: wrong number of labels");
    }
  }
};

// PC1-PC3 plus their immediate consequences (r(d(x)) = d(x),
// d(r(x)) = r(x), and d/r of a defined product), plus validity of the
// identity order when present.
inline CheckReport check_partial_category(PartialCategory const& c,
                                          CheckOptions opts = {}) {
  CheckReport rep("partial-category");
  element const n = static_cast<element>(c.n);
  for (element x = 0; x < n; ++x) {
    ++rep.checked;
    if (!c.defined(c.d[x], x) || c.at(c.d[x], x) != x) {
      rep.fail("PC1-left", {x}, opts.max_witnesses);
    }
    ++rep.checked;
    if (!c.defined(x, c.r[x]) || c.at(x, c.r[x]) != x) {
      rep.fail("PC1-right", {x}, opts.max_witnesses);
    }
    ++rep.checked;
    if (c.r[c.d[x]] != c.d[x] || c.d[c.r[x]] != c.r[x]) {
      rep.fail("identity-fixed", {x}, opts.max_witnesses);
    }
  }
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      if (!c.defined(x, y)) {
        continue;
      }
      ++rep.checked;
      if (c.r[x] != c.d[y]) {
        rep.fail("PC2", {x, y}, opts.max_witnesses);
      }
      element const xy = c.at(x, y);
      ++rep.checked;
      if (c.d[xy] != c.d[x] || c.r[xy] != c.r[y]) {
        rep.fail("product-ends", {x, y}, opts.max_witnesses);
      }
    }
  }
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      for (element z = 0; z < n; ++z) {
        bool const left =
            c.defined(x, y) && c.defined(c.at(x, y), z);
        bool const right =
            c.defined(y, z) && c.defined(x, c.at(y, z));
        ++rep.checked;
        if (left != right) {
          rep.fail("PC3-defined", {x, y, z}, opts.max_witnesses);
        } else if (left && c.at(c.at(x, y), z) != c.at(x, c.at(y, z))) {
          rep.fail("PC3-equal", {x, y, z}, opts.max_witnesses);
        }
      }
    }
  }
  if (c.id_order) {
    ++rep.checked;
    if (!c.id_order->is_partial_order_on(c.identity_elements())) {
      rep.fail("idorder-partial-order", {}, opts.max_witnesses);
    }
  }
  return rep;
}

// Whether composition is defined exactly on the pairs with r(x) = d(y).
// Pre: c passes check_partial_category.
inline bool is_category(PartialCategory const& c) {
  if (!check_partial_category(c, CheckOptions{1}).holds) {
    throw PreconditionError("is_category: not a partial category");
  }
  element const n = static_cast<element>(c.n);
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      if (c.defined(x, y) != (c.r[x] == c.d[y])) {
        return false;
      }
    }
  }
  return true;
}

// A subset P failed the saturation requirement: a o b lies in P but a
// factor does not.
class NotSaturatedError : public std::runtime_error {
 public:
  NotSaturatedError(element a, element b, element product)
      : std::runtime_error("subset not saturated: product of "
                           + std::to_string(a) + " and " + std::to_string(b)
                           + " lies inside, element " + std::to_string(a)
                           + " or " + std::to_string(b) + " does not"),
        a_(a),
        b_(b),
        product_(product) {}

  element a() const noexcept { return a_; }
  element b() const noexcept { return b_; }
  element product() const noexcept { return product_; }

 private:
  element a_, b_, product_;
};

// Restrict a category to a saturated subset P (a o b in P implies a, b in
// P); composition keeps exactly the products that land in P.  The result
// is a partial category on P, reindexed densely in the parent's order.
// Pre: c is a category (is_category(c)).
inline PartialCategory saturated_restrict(PartialCategory const& c,
                                          std::vector<bool> const& members) {
  if (members.size() != c.n) {
    throw std::invalid_argument("saturated_restrict: member mask size");
  }
  if (!is_category(c)) {
    throw PreconditionError("saturated_restrict: input is not a category");
  }
  element const n = static_cast<element>(c.n);
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      if (c.defined(a, b) && members[c.at(a, b)]
          && (!members[a] || !members[b])) {
        throw NotSaturatedError(a, b, c.at(a, b));
      }
    }
  }
  std::vector<element> to_new(c.n, UNDEFINED);
  std::vector<element> to_old;
  for (element x = 0; x < n; ++x) {
    if (members[x]) {
      to_new[x] = static_cast<element>(to_old.size());
      to_old.push_back(x);
    }
  }
  PartialCategory out;
  out.n = to_old.size();
  out.comp.assign(out.n * out.n, UNDEFINED);
  out.d.resize(out.n);
  out.r.resize(out.n);
  for (element i = 0; i < out.n; ++i) {
    // d(x) o x = x lands in P, so the saturation check already forced the
    // identities of members to be members themselves.
    out.d[i] = to_new[c.d[to_old[i]]];
    out.r[i] = to_new[c.r[to_old[i]]];
    for (element j = 0; j < out.n; ++j) {
      element const p = c.at(to_old[i], to_old[j]);
      if (p != UNDEFINED && members[p]) {
        out.comp[i * out.n + j] = to_new[p];
      }
    }
  }
  if (c.id_order) {
    Relation rel(out.n);
    for (element i = 0; i < out.n; ++i) {
      for (element j = 0; j < out.n; ++j) {
        rel.set(i, j, c.id_order->at(to_old[i], to_old[j]));
      }
    }
    out.id_order = std::move(rel);
  }
  if (!c.labels.empty()) {
    for (element x : to_old) {
      out.labels.push_back(c.labels[x]);
    }
  }
  return out;
}

}  // namespace drcat
