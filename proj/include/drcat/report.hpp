#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "types.hpp"

namespace drcat {

struct CheckOptions {
  // Witnesses stored per report; every failure is still counted.
  std::size_t max_witnesses = 8;
};

// One counterexample: the short name of the violated law plus the element
// tuple at which it fails.
struct Witness {
  std::string law;
  std::vector<element> elems;

  friend bool operator==(Witness const&, Witness const&) = default;
};

// Outcome of an exhaustive condition check.
//
// holds == true implies witnesses is empty.  failure_count counts every
// violation even once the witness cap is reached.  A report with
// precondition_failed == true means the structure failed a gating check
// (e.g. the DR axioms) and the condition itself was never evaluated.
//
// internal_ok covers consistency assertions that are theorems given the
// main laws; a failure there indicates a bug in this library rather than
// a property of the input, and is reported separately so it is never
// mistaken for a data failure.
struct CheckReport {
  std::string name;
  bool holds = true;
  bool precondition_failed = false;
  bool internal_ok = true;
  std::vector<Witness> witnesses;
  std::vector<Witness> internal_witnesses;
  std::uint64_t failure_count = 0;
  std::uint64_t checked = 0;
  std::string note;  // free-form detail, e.g. why a precondition failed

  CheckReport() = default;
  explicit CheckReport(std::string name_) : name(std::move(name_)) {}

  void fail(std::string const& law, std::vector<element> elems,
            std::size_t cap) {
    holds = false;
    ++failure_count;
    if (witnesses.size() < cap) {
      witnesses.push_back({law, std::move(elems)});
    }
  }

  void fail_internal(std::string const& law, std::vector<element> elems,
                     std::size_t cap) {
    internal_ok = false;
    if (internal_witnesses.size() < cap) {
      internal_witnesses.push_back({law, std::move(elems)});
    }
  }

  static CheckReport precondition(std::string name, std::string why) {
    CheckReport rep(std::move(name));
    rep.holds = false;
    rep.precondition_failed = true;
    rep.note = std::move(why);
    return rep;
  }

  friend bool operator==(CheckReport const&, CheckReport const&) = default;
};

}  // namespace drcat
