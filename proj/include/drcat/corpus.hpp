#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "conditions.hpp"
#include "semigroup.hpp"
#include "types.hpp"

namespace drcat {

// FNV-1a, used for content-addressed corpus file names.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static char const* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

namespace detail {

inline std::vector<element> relabel_key(BiunarySemigroup const& s,
                                        std::vector<element> const& p) {
  std::size_t const n = s.n;
  std::vector<element> key(n * n + 2 * n);
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      key[p[x] * n + p[y]] = p[s.mul[x * n + y]];
    }
    key[n * n + p[x]] = p[s.d[x]];
    key[n * n + n + p[x]] = p[s.r[x]];
  }
  return key;
}

}  // namespace detail

// Concatenated (mul, D, R) tables of the lexicographically least
// relabeling of s; equal keys mean isomorphic structures.
inline std::vector<element> canonical_key(BiunarySemigroup const& s) {
  std::vector<element> perm(s.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<element> best = detail::relabel_key(s, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto key = detail::relabel_key(s, perm);
    if (key < best) {
      best = std::move(key);
    }
  }
  return best;
}

// The canonical representative itself, with default labels.
inline BiunarySemigroup canonical_form(BiunarySemigroup const& s) {
  auto const key = canonical_key(s);
  std::size_t const n = s.n;
  BiunarySemigroup out;
  out.n = n;
  out.mul.assign(key.begin(), key.begin() + n * n);
  out.d.assign(key.begin() + n * n, key.begin() + n * n + n);
  out.r.assign(key.begin() + n * n + n, key.end());
  return out;
}

// All associative tables of order n, in a deterministic order.  The
// diagonal is fixed first, then the remaining cells are filled row-major
// with associativity pruning after every assignment.
inline std::vector<std::vector<element>> all_associative_tables(
    std::size_t n) {
  std::vector<std::vector<element>> out;
  if (n == 0) {
    return out;
  }
  if (n > 4) {
    throw CapExceeded("all_associative_tables: order above 4 not supported");
  }
  std::vector<std::size_t> cells;
  for (std::size_t i = 0; i < n; ++i) {
    cells.push_back(i * n + i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) {
        cells.push_back(i * n + j);
      }
    }
  }
  std::vector<element> mul(n * n, UNDEFINED);
  auto consistent = [&]() {
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        element const xy = mul[x * n + y];
        if (xy == UNDEFINED) {
          continue;
        }
        for (element z = 0; z < n; ++z) {
          element const yz = mul[y * n + z];
          if (yz == UNDEFINED) {
            continue;
          }
          element const left = mul[xy * n + z];
          element const right = mul[x * n + yz];
          if (left != UNDEFINED && right != UNDEFINED && left != right) {
            return false;
          }
        }
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      out.push_back(mul);
      return;
    }
    for (element v = 0; v < n; ++v) {
      mul[cells[k]] = v;
      if (consistent()) {
        self(self, k + 1);
      }
    }
    mul[cells[k]] = UNDEFINED;
  };
  rec(rec, 0);
  return out;
}

// Every DR-semigroup of order <= max_order up to isomorphism: each
// associative table is combined with every idempotent subset for which
// the least-identity derivation succeeds, and the results are
// deduplicated by canonical form.  Sorted by order, then canonical key.
inline std::vector<BiunarySemigroup> enumerate_dr_corpus(
    std::size_t max_order) {
  if (max_order > 4) {
    throw CapExceeded("enumerate_dr_corpus: order above 4 not supported");
  }
  std::vector<BiunarySemigroup> out;
  for (std::size_t k = 1; k <= max_order; ++k) {
    std::map<std::vector<element>, BiunarySemigroup> seen;
    for (auto const& mul : all_associative_tables(k)) {
      std::vector<element> idem;
      for (element x = 0; x < k; ++x) {
        if (mul[x * k + x] == x) {
          idem.push_back(x);
        }
      }
      for (std::uint32_t mask = 1;
           mask < (std::uint32_t{1} << idem.size()); ++mask) {
        std::vector<element> e_set;
        for (std::size_t i = 0; i < idem.size(); ++i) {
          if (mask & (std::uint32_t{1} << i)) {
            e_set.push_back(idem[i]);
          }
        }
        auto derived = derive_dr_from_e(k, mul, e_set);
        if (derived.ok()) {
          auto canon = canonical_form(*derived.semigroup);
          seen.emplace(canonical_key(canon), std::move(canon));
        }
      }
    }
    for (auto& entry : seen) {
      out.push_back(std::move(entry.second));
    }
  }
  return out;
}

}  // namespace drcat
