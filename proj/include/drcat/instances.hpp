#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "generators.hpp"
#include "powerset.hpp"
#include "relation.hpp"
#include "semigroup.hpp"
#include "types.hpp"

namespace drcat {

class NotAClosureOperatorError : public std::runtime_error {
 public:
  NotAClosureOperatorError(std::string law, std::string detail)
      : std::runtime_error("not a closure operator (" + law + "): " + detail),
        law_(std::move(law)) {}

  std::string const& law() const { return law_; }

 private:
  std::string law_;
};

namespace detail {

inline std::string mask_label(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t rest = mask; rest;) {
    std::uint32_t const bit = rest & (~rest + 1);
    out += (first ? "" : ",") + std::to_string(__builtin_ctz(rest));
    first = false;
    rest ^= bit;
  }
  return out + "}";
}

}  // namespace detail

// The DR-semigroup (2^X, intersection) with D = R = cl.  Subsets are
// indexed by bitmask over a ground set of the given size; cl maps each
// mask to its closure.  The table must be extensive, monotone and
// idempotent.
inline BiunarySemigroup closure_powerset(std::size_t set_size,
                                         std::vector<std::uint32_t> const& cl) {
  if (set_size >= 20) {
    throw CapExceeded("closure_powerset: ground set too large");
  }
  std::uint32_t const total = std::uint32_t{1} << set_size;
  if (cl.size() != total) {
    throw std::invalid_argument(
        "closure_powerset: table must have one entry per subset");
  }
  for (std::uint32_t t = 0; t < total; ++t) {
    if (cl[t] >= total || (t & cl[t]) != t) {
      throw NotAClosureOperatorError(
          "extensive", "subset " + detail::mask_label(t)
                           + " is not contained in its closure");
    }
    if (cl[cl[t]] != cl[t]) {
      throw NotAClosureOperatorError(
          "idempotent",
          "closure of " + detail::mask_label(t) + " is not closed");
    }
    for (std::uint32_t u = t;; u = (u + 1) | t) {
      // u runs over the supersets of t.
      if ((cl[t] & cl[u]) != cl[t]) {
        throw NotAClosureOperatorError(
            "monotone", detail::mask_label(t) + " within "
                            + detail::mask_label(u)
                            + " but closures are not nested");
      }
      if (u == total - 1) {
        break;
      }
    }
  }
  BiunarySemigroup s;
  s.n = total;
  s.mul.resize(std::size_t{total} * total);
  s.d.assign(cl.begin(), cl.end());
  s.r = s.d;
  for (std::uint32_t a = 0; a < total; ++a) {
    for (std::uint32_t b = 0; b < total; ++b) {
      s.mul[std::size_t{a} * total + b] = a & b;
    }
  }
  for (std::uint32_t t = 0; t < total; ++t) {
    s.labels.push_back(detail::mask_label(t));
  }
  return s;
}

// cl(T) = down-set generated by T in a quasiordered ground set.
inline std::vector<std::uint32_t> down_set_closure(Relation const& q) {
  if (!q.is_preorder()) {
    throw NotPreorderError("down_set_closure");
  }
  std::size_t const n = q.size();
  std::vector<std::uint32_t> below(n, 0);
  for (element y = 0; y < n; ++y) {
    for (element x = 0; x < n; ++x) {
      if (q.at(y, x)) {
        below[x] |= std::uint32_t{1} << y;
      }
    }
  }
  std::vector<std::uint32_t> cl(std::uint32_t{1} << n, 0);
  for (std::uint32_t t = 1; t < cl.size(); ++t) {
    std::uint32_t const low = t & (~t + 1);
    cl[t] = cl[t ^ low] | below[__builtin_ctz(t)];
  }
  return cl;
}

struct QuasiOrderedSet {
  std::size_t n;
  Relation q;

  QuasiOrderedSet(std::size_t size, Relation relation)
      : n(size), q(std::move(relation)) {
    if (q.size() != n || !q.is_preorder()) {
      throw NotPreorderError("QuasiOrderedSet");
    }
  }
};

// The DR-semigroup of strongly order-preserving partial functions on a
// quasiordered set: those f with x <= y iff f(x) <= f(y) for x, y in
// dom(f).  Product fg applies f first; D(f) is the partial identity on
// the down-set closure of dom(f), and R(f) dually on im(f).
struct PsoSemigroup {
  BiunarySemigroup semigroup;
  // maps[i][x] = image of x under element i, or UNDEFINED.
  std::vector<std::vector<element>> maps;
  // Indices of the partial identities, by ground-subset mask.
  std::vector<element> identity_restriction;
};

inline PsoSemigroup pso_semigroup(QuasiOrderedSet const& x,
                                  std::size_t cap = 4) {
  std::size_t const n = x.n;
  if (n > cap || n >= 8) {
    throw CapExceeded("pso_semigroup: ground set exceeds the cap");
  }
  auto const cl = down_set_closure(x.q);
  auto strongly_preserving = [&](std::vector<element> const& f) {
    for (element a = 0; a < n; ++a) {
      if (f[a] == UNDEFINED) {
        continue;
      }
      for (element b = 0; b < n; ++b) {
        if (f[b] != UNDEFINED && x.q.at(a, b) != x.q.at(f[a], f[b])) {
          return false;
        }
      }
    }
    return true;
  };
  PsoSemigroup out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= n + 1;
  }
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<element> f(n);
    std::uint64_t rest = code;
    for (std::size_t a = 0; a < n; ++a) {
      std::uint64_t const digit = rest % (n + 1);
      rest /= n + 1;
      f[a] = digit == n ? UNDEFINED : static_cast<element>(digit);
    }
    if (strongly_preserving(f)) {
      out.maps.push_back(std::move(f));
    }
  }
  auto mask_of_dom = [&](std::vector<element> const& f) {
    std::uint32_t m = 0;
    for (element a = 0; a < n; ++a) {
      if (f[a] != UNDEFINED) {
        m |= std::uint32_t{1} << a;
      }
    }
    return m;
  };
  auto mask_of_im = [&](std::vector<element> const& f) {
    std::uint32_t m = 0;
    for (element a = 0; a < n; ++a) {
      if (f[a] != UNDEFINED) {
        m |= std::uint32_t{1} << f[a];
      }
    }
    return m;
  };
  auto find = [&](std::vector<element> const& f) {
    for (element i = 0; i < out.maps.size(); ++i) {
      if (out.maps[i] == f) {
        return i;
      }
    }
    throw std::logic_error("pso_semigroup: composite escaped the carrier");
  };
  auto partial_identity = [&](std::uint32_t mask) {
    std::vector<element> f(n, UNDEFINED);
    for (element a = 0; a < n; ++a) {
      if (mask & (std::uint32_t{1} << a)) {
        f[a] = a;
      }
    }
    return f;
  };
  std::size_t const k = out.maps.size();
  out.semigroup.n = k;
  out.semigroup.mul.resize(k * k);
  out.semigroup.d.resize(k);
  out.semigroup.r.resize(k);
  for (element i = 0; i < k; ++i) {
    auto const& f = out.maps[i];
    out.semigroup.d[i] = find(partial_identity(cl[mask_of_dom(f)]));
    out.semigroup.r[i] = find(partial_identity(cl[mask_of_im(f)]));
    for (element j = 0; j < k; ++j) {
      auto const& g = out.maps[j];
      std::vector<element> h(n, UNDEFINED);
      for (element a = 0; a < n; ++a) {
        if (f[a] != UNDEFINED && g[f[a]] != UNDEFINED) {
          h[a] = g[f[a]];
        }
      }
      out.semigroup.mul[std::size_t{i} * k + j] = find(h);
    }
    std::string lab = "[";
    bool first = true;
    for (element a = 0; a < n; ++a) {
      if (f[a] != UNDEFINED) {
        lab += (first ? "" : ",") + std::to_string(a) + ">"
               + std::to_string(f[a]);
        first = false;
      }
    }
    out.semigroup.labels.push_back(lab + "]");
  }
  out.identity_restriction.resize(std::uint32_t{1} << n);
  for (std::uint32_t mask = 0; mask < out.identity_restriction.size();
       ++mask) {
    out.identity_restriction[mask] = find(partial_identity(mask));
  }
  return out;
}

// A worked scenario: two interval isometries whose induced power-set
// subalgebra breaks the congruence conditions.
struct IntervalIsometryScenario {
  PartialCategory category;
  Subset f;
  Subset g;
  Subset fg;
  Subset d_fg;
  Subset d_f_dg;
  SubalgebraResult induced;
  element f_index = 0;
  element g_index = 1;
};

namespace detail {

inline element find_label(PartialCategory const& c, std::string const& lab) {
  for (element i = 0; i < c.n; ++i) {
    if (c.labels[i] == lab) {
      return i;
    }
  }
  throw std::logic_error("find_label: no element labelled " + lab);
}

}  // namespace detail

inline IntervalIsometryScenario interval_isometry_instance() {
  IntervalIsometryScenario sc;
  sc.category = interval_partial_category(0, 10, 5);
  auto pair_at = [&](long x, long y) {
    return detail::find_label(
        sc.category, "(" + std::to_string(x) + "," + std::to_string(y) + ")");
  };
  sc.f = make_subset(sc.category, {pair_at(1, 3), pair_at(3, 7)});
  sc.g = make_subset(sc.category, {pair_at(3, 5), pair_at(7, 9)});
  sc.fg = subset_product(sc.category, sc.f, sc.g);
  sc.d_fg = subset_d(sc.category, sc.fg);
  sc.d_f_dg = subset_d(
      sc.category,
      subset_product(sc.category, sc.f, subset_d(sc.category, sc.g)));
  sc.induced = powerset_subalgebra(sc.category, {sc.f, sc.g}, {"f", "g"});
  return sc;
}

}  // namespace drcat
