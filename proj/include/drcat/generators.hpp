#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partial_category.hpp"
#include "relation.hpp"
#include "types.hpp"

namespace drcat {

class NotPreorderError : public std::invalid_argument {
 public:
  explicit NotPreorderError(std::string const& what)
      : std::invalid_argument(what) {}
};

// Posetal category of a quasiorder: elements are the pairs (x,y) with
// x <= y, sorted lexicographically; (x,y) o (u,v) = (x,v) exactly when
// y = u; d((x,y)) = (x,x), r((x,y)) = (y,y).
inline PartialCategory posetal_category(
    Relation const& q, std::vector<std::string> ground_labels = {}) {
  if (!q.is_preorder()) {
    throw NotPreorderError("posetal_category: relation is not a quasiorder");
  }
  if (!ground_labels.empty() && ground_labels.size() != q.size()) {
    throw std::invalid_argument("posetal_category: wrong number of labels");
  }
  auto ground = [&](element x) {
    return ground_labels.empty() ? std::to_string(x) : ground_labels[x];
  };
  std::vector<std::pair<element, element>> pairs;
  for (element x = 0; x < q.size(); ++x) {
    for (element y = 0; y < q.size(); ++y) {
      if (q.at(x, y)) {
        pairs.emplace_back(x, y);
      }
    }
  }
  std::map<std::pair<element, element>, element> index;
  for (element i = 0; i < pairs.size(); ++i) {
    index[pairs[i]] = i;
  }
  PartialCategory c;
  c.n = pairs.size();
  c.comp.assign(c.n * c.n, UNDEFINED);
  c.d.resize(c.n);
  c.r.resize(c.n);
  for (element i = 0; i < c.n; ++i) {
    auto const [x, y] = pairs[i];
    c.d[i] = index.at({x, x});
    c.r[i] = index.at({y, y});
    c.labels.push_back("(" + ground(x) + "," + ground(y) + ")");
    for (element j = 0; j < c.n; ++j) {
      auto const [u, v] = pairs[j];
      if (y == u) {
        // x <= y = u <= v, so (x,v) is an element by transitivity.
        c.comp[i * c.n + j] = index.at({x, v});
      }
    }
  }
  return c;
}

// Saturated piece of the posetal category of the chain lo..hi keeping the
// intervals of length < bound: composition of (x,y) and (y,z) is defined
// only while z - x < bound.  Not a category once the bound bites.
inline PartialCategory interval_partial_category(long lo, long hi,
                                                 long bound) {
  if (lo > hi || bound < 1) {
    throw std::invalid_argument(
        "interval_partial_category: need lo <= hi and bound >= 1");
  }
  std::vector<std::pair<long, long>> pairs;
  for (long x = lo; x <= hi; ++x) {
    for (long y = x; y <= hi && y - x < bound; ++y) {
      pairs.emplace_back(x, y);
    }
  }
  std::map<std::pair<long, long>, element> index;
  for (element i = 0; i < pairs.size(); ++i) {
    index[pairs[i]] = i;
  }
  PartialCategory c;
  c.n = pairs.size();
  c.comp.assign(c.n * c.n, UNDEFINED);
  c.d.resize(c.n);
  c.r.resize(c.n);
  for (element i = 0; i < c.n; ++i) {
    auto const [x, y] = pairs[i];
    c.d[i] = index.at({x, x});
    c.r[i] = index.at({y, y});
    c.labels.push_back("(" + std::to_string(x) + "," + std::to_string(y)
                       + ")");
    for (element j = 0; j < c.n; ++j) {
      auto const [u, v] = pairs[j];
      if (y == u && v - x < bound) {
        c.comp[i * c.n + j] = index.at({x, v});
      }
    }
  }
  return c;
}

struct Digraph {
  std::size_t num_vertices = 0;
  std::vector<std::pair<element, element>> edges;
};

// Paths of length <= maxlen in a digraph, identified with their vertex
// sequences (parallel edges collapse); length-0 paths are the identities.
// Elements are sorted by (length, vertex sequence); composition is
// concatenation while the combined length stays within maxlen.
inline PartialCategory path_category_truncation(Digraph const& g,
                                                std::size_t maxlen) {
  if (maxlen < 1) {
    throw std::invalid_argument("path_category_truncation: maxlen >= 1");
  }
  std::set<std::pair<element, element>> edges;
  for (auto const& [u, v] : g.edges) {
    if (u >= g.num_vertices || v >= g.num_vertices) {
      throw std::invalid_argument("path_category_truncation: edge out of range");
    }
    edges.insert({u, v});
  }
  std::vector<std::vector<element>> paths;
  for (element v = 0; v < g.num_vertices; ++v) {
    paths.push_back({v});
  }
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= maxlen; ++len) {
    std::size_t const level_end = paths.size();
    std::vector<std::vector<element>> next;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (auto const& [u, v] : edges) {
        if (paths[i].back() == u) {
          auto p = paths[i];
          p.push_back(v);
          next.push_back(std::move(p));
        }
      }
    }
    std::sort(next.begin(), next.end());
    level_begin = paths.size();
    paths.insert(paths.end(), next.begin(), next.end());
    if (next.empty()) {
      break;
    }
  }
  std::map<std::vector<element>, element> index;
  for (element i = 0; i < paths.size(); ++i) {
    index[paths[i]] = i;
  }
  PartialCategory c;
  c.n = paths.size();
  c.comp.assign(c.n * c.n, UNDEFINED);
  c.d.resize(c.n);
  c.r.resize(c.n);
  for (element i = 0; i < c.n; ++i) {
    auto const& p = paths[i];
    c.d[i] = index.at({p.front()});
    c.r[i] = index.at({p.back()});
    std::string lab;
    for (std::size_t k = 0; k < p.size(); ++k) {
      lab += (k ? "-" : "") + std::to_string(p[k]);
    }
    c.labels.push_back(lab);
    for (element j = 0; j < c.n; ++j) {
      auto const& q = paths[j];
      if (p.back() == q.front() && p.size() - 1 + q.size() - 1 <= maxlen) {
        auto cat = p;
        cat.insert(cat.end(), q.begin() + 1, q.end());
        c.comp[i * c.n + j] = index.at(cat);
      }
    }
  }
  return c;
}

// Convenience quasiorders for tests and the CLI.
inline Relation chain_order(std::size_t n) {
  Relation rel(n);
  for (element i = 0; i < n; ++i) {
    for (element j = i; j < n; ++j) {
      rel.set(i, j);
    }
  }
  return rel;
}

inline Relation antichain_order(std::size_t n) { return Relation::identity(n); }

}  // namespace drcat
