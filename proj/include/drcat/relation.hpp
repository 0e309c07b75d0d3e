#pragma once

#include <cstddef>
#include <vector>

#include "types.hpp"

namespace drcat {

// Boolean n x n matrix.  Used for the natural order on projections, the
// orders <=_r and <=_l, quasiorders on ground sets, identity orders of
// partial categories and the order of an ample partial category.
//
// Relations that are only meaningful on a subset of the indices (such as
// the natural order, which lives on the projections) keep all rows and
// columns outside that subset identically false.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, false) {}

  static Relation identity(std::size_t n) {
    Relation rel(n);
    for (element i = 0; i < n; ++i) {
      rel.set(i, i);
    }
    return rel;
  }

  std::size_t size() const noexcept { return n_; }

  bool at(element i, element j) const { return bits_[i * n_ + j]; }
  void set(element i, element j, bool value = true) {
    bits_[i * n_ + j] = value;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (bool b : bits_) {
      c += b ? 1 : 0;
    }
    return c;
  }

  bool is_reflexive() const {
    for (element i = 0; i < n_; ++i) {
      if (!at(i, i)) {
        return false;
      }
    }
    return true;
  }

  bool is_antisymmetric() const {
    for (element i = 0; i < n_; ++i) {
      for (element j = 0; j < n_; ++j) {
        if (i != j && at(i, j) && at(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_transitive() const {
    for (element i = 0; i < n_; ++i) {
      for (element j = 0; j < n_; ++j) {
        if (!at(i, j)) {
          continue;
        }
        for (element k = 0; k < n_; ++k) {
          if (at(j, k) && !at(i, k)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_preorder() const { return is_reflexive() && is_transitive(); }

  bool is_partial_order() const {
    return is_reflexive() && is_antisymmetric() && is_transitive();
  }

  // Partial order supported exactly on `domain`: reflexive there, false on
  // every pair touching an index outside it, antisymmetric and transitive.
  bool is_partial_order_on(std::vector<element> const& domain) const {
    std::vector<bool> in(n_, false);
    for (element e : domain) {
      in[e] = true;
    }
    for (element i = 0; i < n_; ++i) {
      for (element j = 0; j < n_; ++j) {
        if (at(i, j) && (!in[i] || !in[j])) {
          return false;
        }
      }
    }
    for (element e : domain) {
      if (!at(e, e)) {
        return false;
      }
    }
    return is_antisymmetric() && is_transitive();
  }

  friend bool operator==(Relation const&, Relation const&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> bits_;
};

}  // namespace drcat
