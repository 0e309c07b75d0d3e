#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "conditions.hpp"
#include "esn.hpp"
#include "partial_category.hpp"
#include "report.hpp"
#include "semigroup.hpp"
#include "types.hpp"

namespace drcat {

// Characteristic vector of a subset of a partial category's elements.
using Subset = boost::dynamic_bitset<>;

inline constexpr std::size_t DEFAULT_SUBSET_CAP = std::size_t{1} << 16;

namespace detail {

inline void require_subset_of(PartialCategory const& c, Subset const& a,
                              char const* who) {
  if (a.size() != c.n) {
    throw std::invalid_argument(std::string(who)
                                + ": subset belongs to a different parent");
  }
}

// Down-set of the identity e with respect to the identity order.
inline Subset identity_downset(PartialCategory const& c, element e) {
  Subset out(c.n);
  for (element f : c.identity_elements()) {
    if (c.id_leq(f, e)) {
      out.set(f);
    }
  }
  return out;
}

}  // namespace detail

inline Subset make_subset(PartialCategory const& c,
                          std::vector<element> const& elems) {
  Subset out(c.n);
  for (element x : elems) {
    if (x >= c.n) {
      throw std::invalid_argument("make_subset: element out of range");
    }
    out.set(x);
  }
  return out;
}

// A B = { a o b : a in A, b in B, a o b defined }.
inline Subset subset_product(PartialCategory const& c, Subset const& a,
                             Subset const& b) {
  detail::require_subset_of(c, a, "subset_product");
  detail::require_subset_of(c, b, "subset_product");
  Subset out(c.n);
  for (auto x = a.find_first(); x != Subset::npos; x = a.find_next(x)) {
    for (auto y = b.find_first(); y != Subset::npos; y = b.find_next(y)) {
      element const p = c.at(static_cast<element>(x), static_cast<element>(y));
      if (p != UNDEFINED) {
        out.set(p);
      }
    }
  }
  return out;
}

// D(A): the down-set of { d(a) : a in A } among the identities.
inline Subset subset_d(PartialCategory const& c, Subset const& a) {
  detail::require_subset_of(c, a, "subset_d");
  Subset out(c.n);
  for (auto x = a.find_first(); x != Subset::npos; x = a.find_next(x)) {
    out |= detail::identity_downset(c, c.d[static_cast<element>(x)]);
  }
  return out;
}

inline Subset subset_r(PartialCategory const& c, Subset const& a) {
  detail::require_subset_of(c, a, "subset_r");
  Subset out(c.n);
  for (auto x = a.find_first(); x != Subset::npos; x = a.find_next(x)) {
    out |= detail::identity_downset(c, c.r[static_cast<element>(x)]);
  }
  return out;
}

// Local criterion: A is bideterministic in P(C) iff for all a, b in A,
// d(a) <= d(b) exactly when r(a) <= r(b).
inline bool is_bideterministic_subset(PartialCategory const& c,
                                      Subset const& a) {
  detail::require_subset_of(c, a, "is_bideterministic_subset");
  for (auto x = a.find_first(); x != Subset::npos; x = a.find_next(x)) {
    for (auto y = a.find_first(); y != Subset::npos; y = a.find_next(y)) {
      element const ax = static_cast<element>(x);
      element const ay = static_cast<element>(y);
      if (c.id_leq(c.d[ax], c.d[ay]) != c.id_leq(c.r[ax], c.r[ay])) {
        return false;
      }
    }
  }
  return true;
}

// A partial isometry: bideterministic and with no two distinct members
// sharing a domain (equivalently, a range).
inline bool is_partial_isometry(PartialCategory const& c, Subset const& a) {
  if (!is_bideterministic_subset(c, a)) {
    return false;
  }
  for (auto x = a.find_first(); x != Subset::npos; x = a.find_next(x)) {
    for (auto y = a.find_next(x); y != Subset::npos; y = a.find_next(y)) {
      if (c.d[static_cast<element>(x)] == c.d[static_cast<element>(y)]) {
        return false;
      }
    }
  }
  return true;
}

// All partial isometries of c, by exhaustive subset scan (ascending mask
// order).  Requires 2^|c| <= cap.
inline std::vector<Subset> partial_isometries(
    PartialCategory const& c, std::size_t cap = DEFAULT_SUBSET_CAP) {
  if (c.n >= 63 || (std::uint64_t{1} << c.n) > cap) {
    throw CapExceeded("partial_isometries: 2^" + std::to_string(c.n)
                      + " subsets exceed the cap");
  }
  std::vector<Subset> out;
  std::uint64_t const total = std::uint64_t{1} << c.n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Subset s(c.n, mask);
    if (is_partial_isometry(c, s)) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

// The power-set DR-semigroup P(C), materialized: element i is the subset
// whose members are the set bits of i.  Pre: c passes
// check_partial_category.  Requires 2^|c| <= cap.
inline BiunarySemigroup powerset_semigroup(PartialCategory const& c,
                                           std::size_t cap
                                           = DEFAULT_SUBSET_CAP) {
  if (!check_partial_category(c, CheckOptions{1}).holds) {
    throw PreconditionError("powerset_semigroup: not a partial category");
  }
  if (c.n >= 31 || (std::uint64_t{1} << c.n) > cap) {
    throw CapExceeded("powerset_semigroup: 2^" + std::to_string(c.n)
                      + " subsets exceed the cap");
  }
  std::uint32_t const m = static_cast<std::uint32_t>(c.n);
  std::uint32_t const total = std::uint32_t{1} << m;
  // img[a][B] = bits of { a o b : b in B }, built incrementally.
  std::vector<std::vector<std::uint32_t>> img(
      m, std::vector<std::uint32_t>(total, 0));
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t bmask = 1; bmask < total; ++bmask) {
      std::uint32_t const low = bmask & (~bmask + 1);
      std::uint32_t const b =
          static_cast<std::uint32_t>(__builtin_ctz(bmask));
      std::uint32_t acc = img[a][bmask ^ low];
      element const p = c.at(a, b);
      if (p != UNDEFINED) {
        acc |= std::uint32_t{1} << p;
      }
      img[a][bmask] = acc;
    }
  }
  std::vector<std::uint32_t> dmask(m), rmask(m);
  for (std::uint32_t a = 0; a < m; ++a) {
    std::uint32_t dm = 0, rm = 0;
    for (element f : c.identity_elements()) {
      if (c.id_leq(f, c.d[a])) {
        dm |= std::uint32_t{1} << f;
      }
      if (c.id_leq(f, c.r[a])) {
        rm |= std::uint32_t{1} << f;
      }
    }
    dmask[a] = dm;
    rmask[a] = rm;
  }
  BiunarySemigroup s;
  s.n = total;
  s.mul.resize(std::size_t{total} * total);
  s.d.resize(total);
  s.r.resize(total);
  s.d[0] = 0;
  s.r[0] = 0;
  for (std::uint32_t amask = 1; amask < total; ++amask) {
    std::uint32_t const low = amask & (~amask + 1);
    std::uint32_t const a = static_cast<std::uint32_t>(__builtin_ctz(amask));
    s.d[amask] = s.d[amask ^ low] | dmask[a];
    s.r[amask] = s.r[amask ^ low] | rmask[a];
  }
  for (std::uint32_t amask = 0; amask < total; ++amask) {
    element* row = s.mul.data() + std::size_t{amask} * total;
    for (std::uint32_t bmask = 0; bmask < total; ++bmask) {
      std::uint32_t acc = 0;
      for (std::uint32_t rest = amask; rest;) {
        std::uint32_t const bit = rest & (~rest + 1);
        acc |= img[__builtin_ctz(rest)][bmask];
        rest ^= bit;
      }
      row[bmask] = acc;
    }
  }
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::string lab = "{";
    bool first = true;
    for (std::uint32_t rest = mask; rest;) {
      std::uint32_t const bit = rest & (~rest + 1);
      lab += (first ? "" : ",") + c.label(__builtin_ctz(rest));
      first = false;
      rest ^= bit;
    }
    s.labels.push_back(lab + "}");
  }
  return s;
}

inline std::string subset_label(PartialCategory const& c, Subset const& a) {
  std::string out = "{";
  bool first = true;
  for (auto x = a.find_first(); x != Subset::npos; x = a.find_next(x)) {
    out += (first ? "" : ",") + c.label(static_cast<element>(x));
    first = false;
  }
  return out + "}";
}

// The sub-DR-semigroup of P(C) generated by the seeds: closed under
// products, D and R, elements indexed in discovery order (seeds first).
struct SubalgebraResult {
  BiunarySemigroup semigroup;
  std::vector<Subset> carriers;
};

inline SubalgebraResult powerset_subalgebra(
    PartialCategory const& c, std::vector<Subset> seeds,
    std::vector<std::string> seed_labels = {},
    std::size_t cap = DEFAULT_SUBSET_CAP) {
  if (!check_partial_category(c, CheckOptions{1}).holds) {
    throw PreconditionError("powerset_subalgebra: not a partial category");
  }
  if (!seed_labels.empty() && seed_labels.size() != seeds.size()) {
    throw std::invalid_argument("powerset_subalgebra: wrong label count");
  }
  std::vector<Subset> elems;
  std::map<Subset, element> index;
  auto add = [&](Subset const& s) {
    if (index.emplace(s, static_cast<element>(elems.size())).second) {
      elems.push_back(s);
      if (elems.size() > cap) {
        throw CapExceeded("powerset_subalgebra: closure exceeds the cap");
      }
    }
  };
  for (auto const& s : seeds) {
    detail::require_subset_of(c, s, "powerset_subalgebra");
    add(s);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    add(subset_d(c, elems[i]));
    add(subset_r(c, elems[i]));
    for (std::size_t j = 0; j <= i; ++j) {
      add(subset_product(c, elems[i], elems[j]));
      add(subset_product(c, elems[j], elems[i]));
    }
  }
  SubalgebraResult out;
  out.semigroup.n = elems.size();
  out.semigroup.mul.resize(elems.size() * elems.size());
  out.semigroup.d.resize(elems.size());
  out.semigroup.r.resize(elems.size());
  for (element i = 0; i < elems.size(); ++i) {
    out.semigroup.d[i] = index.at(subset_d(c, elems[i]));
    out.semigroup.r[i] = index.at(subset_r(c, elems[i]));
    for (element j = 0; j < elems.size(); ++j) {
      out.semigroup.mul[i * elems.size() + j] =
          index.at(subset_product(c, elems[i], elems[j]));
    }
    out.semigroup.labels.push_back(i < seed_labels.size()
                                       ? seed_labels[i]
                                       : subset_label(c, elems[i]));
  }
  out.carriers = std::move(elems);
  return out;
}

// The representation of an ample DR-semigroup inside P(C(S)): s maps to
// its principal down-set { t : t <= s } under the standard order.
struct EmbeddingData {
  AmplePartialCategory derived;
  std::vector<Subset> images;
};

inline EmbeddingData embedding_map(BiunarySemigroup const& s) {
  EmbeddingData out{derive_cs(s), {}};
  for (element x = 0; x < s.n; ++x) {
    Subset im(s.n);
    for (element t = 0; t < s.n; ++t) {
      if (out.derived.order.at(t, x)) {
        im.set(t);
      }
    }
    out.images.push_back(std::move(im));
  }
  return out;
}

// Verifies that the principal down-set map is an injective DR-morphism
// into the partial isometries of C(S), using the lazy subset operations
// (the power set is never materialized).
inline CheckReport check_embedding(BiunarySemigroup const& s,
                                   CheckOptions opts = {}) {
  {
    auto dr = check_dr_axioms(s, CheckOptions{1});
    if (!dr.holds) {
      return CheckReport::precondition("embedding",
                                       "structure fails the DR axioms");
    }
    auto amp = check_ample(s, CheckOptions{1});
    if (!amp.holds) {
      return CheckReport::precondition("embedding",
                                       "structure fails the ample conditions");
    }
  }
  auto const emb = embedding_map(s);
  auto const& pc = emb.derived.pc;
  auto const& f = emb.images;
  CheckReport rep("embedding");
  element const n = static_cast<element>(s.n);
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      if (x != y) {
        ++rep.checked;
        if (f[x] == f[y]) {
          rep.fail("embedding-injective", {x, y}, opts.max_witnesses);
        }
      }
      ++rep.checked;
      if (f[s.product(x, y)] != subset_product(pc, f[x], f[y])) {
        rep.fail("embedding-mul", {x, y}, opts.max_witnesses);
      }
    }
    ++rep.checked;
    if (f[s.d[x]] != subset_d(pc, f[x])) {
      rep.fail("embedding-D", {x}, opts.max_witnesses);
    }
    ++rep.checked;
    if (f[s.r[x]] != subset_r(pc, f[x])) {
      rep.fail("embedding-R", {x}, opts.max_witnesses);
    }
    ++rep.checked;
    if (!is_partial_isometry(pc, f[x])) {
      rep.fail("embedding-partial-isometry", {x}, opts.max_witnesses);
    }
  }
  return rep;
}

}  // namespace drcat
