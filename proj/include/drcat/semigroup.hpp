#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "types.hpp"

namespace drcat {

// A finite magma with two unary maps D and R attached, given by tables.
// Nothing is assumed about the data: whether it is associative, or
// satisfies the DR axioms
//
//   DR1  D(x) x = x
//   DR2  x R(x) = x
//   DR3  R(D(x)) = D(x),  D(R(x)) = R(x)
//   DR4  D(x) D(xy) = D(xy) D(x) = D(xy)
//   DR5  R(y) R(xy) = R(xy) R(y) = R(xy)
//
// is established by the checkers in conditions.hpp.
struct BiunarySemigroup {
  std::size_t n = 0;
  std::vector<element> mul;  // n*n, row-major: mul[x*n+y] = x*y
  std::vector<element> d;    // size n
  std::vector<element> r;    // size n
  std::vector<std::string> labels;  // optional; size 0 or n

  element product(element x, element y) const { return mul[x * n + y]; }
  element D(element x) const { return d[x]; }
  element R(element x) const { return r[x]; }

  std::string label(element x) const {
    return labels.empty() ? std::to_string(x) : labels[x];
  }

  // Structural equality of the algebra; labels are presentation only.
  bool same_tables(BiunarySemigroup const& other) const {
    return n == other.n && mul == other.mul && d == other.d && r == other.r;
  }

  // Shape sanity for data coming in from files or callers: correct table
  // sizes and all entries in range.
  void validate_shape() const {
    if (mul.size() != n * n || d.size() != n || r.size() != n) {
      throw std::invalid_argument("biunary semigroup: table size mismatch");
    }
    for (element v : mul) {
      if (v >= n) {
        throw std::invalid_argument("biunary semigroup: mul entry out of range");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i] >= n || r[i] >= n) {
        throw std::invalid_argument("biunary semigroup: D/R entry out of range");
      }
    }
    if (!labels.empty() && labels.size() != n) {
      throw std::invalid_argument("biunary semigroup: wrong number of labels");
    }
  }
};

}  // namespace drcat
