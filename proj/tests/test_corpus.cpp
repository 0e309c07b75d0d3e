#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include <drcat/conditions.hpp>
#include <drcat/corpus.hpp>

namespace drcat {

namespace {

// Independent re-implementation used as an oracle: every table over
// {0..n-1} by odometer, kept when a direct triple scan finds no violation.
std::vector<std::vector<element>> brute_associative_tables(std::size_t n) {
  std::vector<std::vector<element>> out;
  std::vector<element> t(n * n, 0);
  while (true) {
    bool ok = true;
    for (element x = 0; x < n && ok; ++x) {
      for (element y = 0; y < n && ok; ++y) {
        for (element z = 0; z < n && ok; ++z) {
          ok = t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]];
        }
      }
    }
    if (ok) {
      out.push_back(t);
    }
    std::size_t i = 0;
    while (i < t.size() && t[i] + 1 == n) {
      t[i++] = 0;
    }
    if (i == t.size()) {
      return out;
    }
    ++t[i];
  }
}

std::vector<element> flat_key(std::size_t n, std::vector<element> const& mul,
                              std::vector<element> const& d,
                              std::vector<element> const& r,
                              std::vector<element> const& p) {
  std::vector<element> key;
  key.resize(n * n + 2 * n);
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      key[p[x] * n + p[y]] = p[mul[x * n + y]];
    }
    key[n * n + p[x]] = p[d[x]];
    key[n * n + n + p[x]] = p[r[x]];
  }
  return key;
}

}  // namespace

TEST_CASE("Corpus 01: content hash and hex formatting", "[quick][corpus][01]") {
  REQUIRE(fnv1a64("") == 14695981039346656037ull);
  for (std::string const text : {"a", "hello", "drsemigroup"}) {
    std::uint64_t h = 14695981039346656037ull;
    for (char c : text) {
      h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    }
    REQUIRE(fnv1a64(text) == h);
  }
  REQUIRE(hex64(0) == "0000000000000000");
  REQUIRE(hex64(0xdeadbeefull) == "00000000deadbeef");
  REQUIRE(hex64(~0ull) == "ffffffffffffffff");
}

TEST_CASE("Corpus 02: associative tables match a brute-force scan",
          "[quick][corpus][02]") {
  std::array<std::size_t, 3> const counts{1, 8, 113};
  for (std::size_t n = 1; n <= 3; ++n) {
    auto fast = all_associative_tables(n);
    auto slow = brute_associative_tables(n);
    REQUIRE(fast.size() == counts[n - 1]);
    std::sort(fast.begin(), fast.end());
    std::sort(slow.begin(), slow.end());
    REQUIRE(fast == slow);
  }
}

TEST_CASE("Corpus 03: associative table count at order four",
          "[corpus][03]") {
  REQUIRE(all_associative_tables(4).size() == 3492);
  REQUIRE_THROWS_AS(all_associative_tables(5), CapExceeded);
}

TEST_CASE("Corpus 04: canonical form is idempotent and relabel-invariant",
          "[quick][corpus][04]") {
  BiunarySemigroup s{3,
                     {0, 0, 0, 0, 1, 1, 0, 1, 2},
                     {0, 2, 2},
                     {0, 2, 2},
                     {}};
  REQUIRE(check_dr_axioms(s).holds);
  auto const canon = canonical_form(s);
  REQUIRE(canonical_form(canon).same_tables(canon));
  REQUIRE(canonical_key(s) == canonical_key(canon));

  // Relabel through every permutation; the key must not move.
  std::vector<element> p{0, 1, 2};
  do {
    BiunarySemigroup t;
    t.n = 3;
    t.mul.resize(9);
    t.d.resize(3);
    t.r.resize(3);
    for (element x = 0; x < 3; ++x) {
      t.d[p[x]] = p[s.d[x]];
      t.r[p[x]] = p[s.r[x]];
      for (element y = 0; y < 3; ++y) {
        t.mul[p[x] * 3 + p[y]] = p[s.product(x, y)];
      }
    }
    REQUIRE(canonical_key(t) == canonical_key(s));
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("Corpus 05: corpus counts by order", "[quick][corpus][05]") {
  REQUIRE(enumerate_dr_corpus(1).size() == 1);
  REQUIRE(enumerate_dr_corpus(2).size() == 4);
  auto const members = enumerate_dr_corpus(3);
  REQUIRE(members.size() == 20);

  std::set<std::vector<element>> keys;
  for (auto const& s : members) {
    REQUIRE(check_dr_axioms(s).holds);
    REQUIRE(canonical_form(s).same_tables(s));  // stored canonically
    REQUIRE(keys.insert(canonical_key(s)).second);  // pairwise distinct
  }
  REQUIRE_THROWS_AS(enumerate_dr_corpus(5), CapExceeded);
}

TEST_CASE("Corpus 06: order-two members against an independent oracle",
          "[quick][corpus][06]") {
  // Rebuild the order-2 slice from scratch: all associative tables, all
  // non-empty idempotent subsets, least-identity derivation, and explicit
  // isomorphism dedup over the two permutations.
  std::set<std::vector<element>> found;
  for (auto const& mul : brute_associative_tables(2)) {
    for (std::uint32_t mask = 1; mask < 4; ++mask) {
      std::vector<element> e_set;
      for (element e = 0; e < 2; ++e) {
        if ((mask >> e & 1) && mul[e * 2 + e] == e) {
          e_set.push_back(e);
        }
      }
      if (e_set.empty() || e_set.size() != __builtin_popcount(mask)) {
        continue;
      }
      auto leq = [&](element a, element b) {
        return mul[a * 2 + b] == a && mul[b * 2 + a] == a;
      };
      auto side = [&](bool left) {
        std::vector<element> u(2, UNDEFINED);
        for (element x = 0; x < 2; ++x) {
          for (element e : e_set) {
            bool const fixes =
                left ? mul[e * 2 + x] == x : mul[x * 2 + e] == x;
            if (!fixes) {
              continue;
            }
            bool least = true;
            for (element f : e_set) {
              bool const fixes_f =
                  left ? mul[f * 2 + x] == x : mul[x * 2 + f] == x;
              if (fixes_f && !leq(e, f)) {
                least = false;
              }
            }
            if (least) {
              u[x] = e;
            }
          }
        }
        return u;
      };
      auto const d = side(true);
      auto const r = side(false);
      if (std::count(d.begin(), d.end(), UNDEFINED)
          || std::count(r.begin(), r.end(), UNDEFINED)) {
        continue;
      }
      auto key = flat_key(2, mul, d, r, {0, 1});
      key = std::min(key, flat_key(2, mul, d, r, {1, 0}));
      found.insert(key);
    }
  }
  REQUIRE(found.size() == 3);

  std::set<std::vector<element>> library;
  for (auto const& s : enumerate_dr_corpus(2)) {
    if (s.n == 2) {
      library.insert(canonical_key(s));
    }
  }
  REQUIRE(library == found);
}

TEST_CASE("Corpus 07: members rederive from their own projections",
          "[quick][corpus][07]") {
  for (auto const& s : enumerate_dr_corpus(3)) {
    auto const again = derive_dr_from_e(s.n, s.mul, projections(s));
    REQUIRE(again.ok());
    REQUIRE(again.semigroup->same_tables(s));
  }
}

TEST_CASE("Corpus 08: order-four slice", "[corpus][08]") {
  auto const members = enumerate_dr_corpus(4);
  REQUIRE(members.size() == 142);
  std::size_t order4 = 0;
  for (auto const& s : members) {
    if (s.n == 4) {
      ++order4;
    }
    REQUIRE(check_dr_axioms(s).holds);
  }
  REQUIRE(order4 == 122);
}

}  // namespace drcat
