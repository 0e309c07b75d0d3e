#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "corpus.hpp"
#include "partial_category.hpp"
#include "relation.hpp"
#include "report.hpp"
#include "semigroup.hpp"
#include "types.hpp"

namespace drcat {

// ---------------------------------------------------------------------
// Text formats.
//
// DR-semigroup:                      Partial category:
//
//   drsemigroup                        partialcategory
//   order 3                            order 4
//   mul                                comp
//   0 0 0                              0 - - -
//   0 1 1                              - 1 - 3
//   0 1 2                              - - 2 -
//   D                                  - - - -
//   0 1 2                              D
//   R                                  0 1 2 2
//   0 1 2                              R
//   labels                             0 1 3 1
//   zero e f                           idorder 3   (optional; pairs i j)
//   end                                0 0
//                                      ...
//                                      order 5     (optional; the order
//                                      0 0          of an ample partial
//                                      ...          category, as pairs)
//                                      labels      (optional)
//                                      e f x y
//                                      end
//
// Tokens are whitespace-separated; `#` starts a comment that runs to the
// end of the line.  The serializers below emit a canonical form: block
// order as shown, single spaces, one table row per line, labels only
// when present, `idorder` only when no full order is carried.
// ---------------------------------------------------------------------

namespace detail {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t col;
};

class TokenStream {
 public:
  explicit TokenStream(std::string_view src) {
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    while (i < src.size()) {
      char const c = src[i];
      if (c == '#') {
        while (i < src.size() && src[i] != '\n') {
          ++i;
        }
        continue;
      }
      if (c == '\n') {
        ++line;
        col = 1;
        ++i;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        ++col;
        ++i;
        continue;
      }
      std::size_t const start = i;
      std::size_t const start_col = col;
      while (i < src.size() && src[i] != ' ' && src[i] != '\t'
             && src[i] != '\r' && src[i] != '\n' && src[i] != '#') {
        ++i;
        ++col;
      }
      toks_.push_back(
          {std::string(src.substr(start, i - start)), line, start_col});
    }
    end_line_ = line;
    end_col_ = col;
  }

  bool done() const { return pos_ >= toks_.size(); }

  Token const& peek() const {
    if (done()) {
      throw ParseError(end_line_, end_col_, "unexpected end of input");
    }
    return toks_[pos_];
  }

  Token const& next() {
    Token const& t = peek();
    ++pos_;
    return t;
  }

  void expect(std::string_view word) {
    Token const& t = next();
    if (t.text != word) {
      throw ParseError(t.line, t.col,
                       "expected '" + std::string(word) + "', found '"
                           + t.text + "'");
    }
  }

  std::uint64_t number(std::uint64_t max, char const* what) {
    Token const& t = next();
    std::uint64_t value = 0;
    auto const* begin = t.text.data();
    auto const* end = begin + t.text.size();
    auto const res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
      throw ParseError(t.line, t.col,
                       std::string(what) + ": expected a number, found '"
                           + t.text + "'");
    }
    if (value > max) {
      throw ParseError(t.line, t.col,
                       std::string(what) + ": value " + t.text
                           + " out of range (max "
                           + std::to_string(max) + ")");
    }
    return value;
  }

  // A table entry: a number below n, or `-` for undefined when allowed.
  element entry(std::size_t n, bool allow_undefined, char const* what) {
    Token const& t = peek();
    if (allow_undefined && t.text == "-") {
      ++pos_;
      return UNDEFINED;
    }
    return static_cast<element>(number(n - 1, what));
  }

  void expect_done() {
    if (!done()) {
      Token const& t = peek();
      throw ParseError(t.line, t.col,
                       "unexpected trailing input '" + t.text + "'");
    }
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t end_line_ = 1;
  std::size_t end_col_ = 1;
};

inline std::size_t parse_order(TokenStream& ts) {
  ts.expect("order");
  Token const& t = ts.peek();
  auto const n = ts.number(1u << 20, "order");
  if (n == 0) {
    throw ParseError(t.line, t.col, "order must be positive");
  }
  return static_cast<std::size_t>(n);
}

inline Relation parse_pair_block(TokenStream& ts, std::size_t n,
                                 char const* what) {
  auto const count = ts.number(std::uint64_t{n} * n, what);
  Relation rel(n);
  for (std::uint64_t k = 0; k < count; ++k) {
    auto const i = static_cast<element>(ts.number(n - 1, what));
    auto const j = static_cast<element>(ts.number(n - 1, what));
    rel.set(i, j);
  }
  return rel;
}

inline std::vector<std::string> parse_labels(TokenStream& ts, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(ts.next().text);
  }
  return labels;
}

}  // namespace detail

inline BiunarySemigroup parse_semigroup_body(detail::TokenStream& ts) {
  BiunarySemigroup s;
  s.n = detail::parse_order(ts);
  ts.expect("mul");
  s.mul.resize(s.n * s.n);
  for (auto& cell : s.mul) {
    cell = ts.entry(s.n, false, "mul");
  }
  ts.expect("D");
  s.d.resize(s.n);
  for (auto& cell : s.d) {
    cell = ts.entry(s.n, false, "D");
  }
  ts.expect("R");
  s.r.resize(s.n);
  for (auto& cell : s.r) {
    cell = ts.entry(s.n, false, "R");
  }
  if (ts.peek().text == "labels") {
    ts.next();
    s.labels = detail::parse_labels(ts, s.n);
  }
  ts.expect("end");
  return s;
}

inline BiunarySemigroup parse_semigroup(std::string_view src) {
  detail::TokenStream ts(src);
  ts.expect("drsemigroup");
  auto s = parse_semigroup_body(ts);
  ts.expect_done();
  return s;
}

struct ParsedCategory {
  PartialCategory category;
  // The full-element order block, when the file describes an ample
  // partial category.
  std::optional<Relation> apc_order;
};

inline ParsedCategory parse_category_body(detail::TokenStream& ts) {
  ParsedCategory out;
  PartialCategory& c = out.category;
  c.n = detail::parse_order(ts);
  ts.expect("comp");
  c.comp.resize(c.n * c.n);
  for (auto& cell : c.comp) {
    cell = ts.entry(c.n, true, "comp");
  }
  ts.expect("D");
  c.d.resize(c.n);
  for (auto& cell : c.d) {
    cell = ts.entry(c.n, false, "D");
  }
  ts.expect("R");
  c.r.resize(c.n);
  for (auto& cell : c.r) {
    cell = ts.entry(c.n, false, "R");
  }
  if (ts.peek().text == "idorder") {
    ts.next();
    c.id_order = detail::parse_pair_block(ts, c.n, "idorder");
  }
  if (ts.peek().text == "order") {
    ts.next();
    out.apc_order = detail::parse_pair_block(ts, c.n, "order");
    if (!c.id_order) {
      // The identity order is the big order restricted to identities.
      Relation rel(c.n);
      for (element e : c.identity_elements()) {
        for (element f : c.identity_elements()) {
          rel.set(e, f, out.apc_order->at(e, f));
        }
      }
      c.id_order = std::move(rel);
    }
  }
  if (ts.peek().text == "labels") {
    ts.next();
    c.labels = detail::parse_labels(ts, c.n);
  }
  ts.expect("end");
  return out;
}

inline ParsedCategory parse_category(std::string_view src) {
  detail::TokenStream ts(src);
  ts.expect("partialcategory");
  auto out = parse_category_body(ts);
  ts.expect_done();
  return out;
}

using ParsedStructure = std::variant<BiunarySemigroup, ParsedCategory>;

inline ParsedStructure parse_structure(std::string_view src) {
  detail::TokenStream ts(src);
  auto const& head = ts.peek();
  if (head.text == "drsemigroup") {
    ts.next();
    auto s = parse_semigroup_body(ts);
    ts.expect_done();
    return s;
  }
  if (head.text == "partialcategory") {
    ts.next();
    auto c = parse_category_body(ts);
    ts.expect_done();
    return c;
  }
  throw ParseError(head.line, head.col,
                   "expected 'drsemigroup' or 'partialcategory', found '"
                       + head.text + "'");
}

namespace detail {

inline void append_row(std::string& out, element const* row, std::size_t n,
                       bool allow_undefined) {
  for (std::size_t i = 0; i < n; ++i) {
    if (i) {
      out += ' ';
    }
    if (allow_undefined && row[i] == UNDEFINED) {
      out += '-';
    } else {
      out += std::to_string(row[i]);
    }
  }
  out += '\n';
}

inline void append_pair_block(std::string& out, char const* keyword,
                              Relation const& rel) {
  out += keyword;
  out += ' ';
  out += std::to_string(rel.count());
  out += '\n';
  for (element i = 0; i < rel.size(); ++i) {
    for (element j = 0; j < rel.size(); ++j) {
      if (rel.at(i, j)) {
        out += std::to_string(i);
        out += ' ';
        out += std::to_string(j);
        out += '\n';
      }
    }
  }
}

inline void append_labels(std::string& out,
                          std::vector<std::string> const& labels) {
  if (labels.empty()) {
    return;
  }
  out += "labels\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out += (i ? " " : "") + labels[i];
  }
  out += '\n';
}

}  // namespace detail

inline std::string serialize_semigroup(BiunarySemigroup const& s) {
  if (s.n == 0) {
    throw std::invalid_argument("serialize_semigroup: empty structure");
  }
  std::string out = "drsemigroup\norder " + std::to_string(s.n) + "\nmul\n";
  for (std::size_t x = 0; x < s.n; ++x) {
    detail::append_row(out, s.mul.data() + x * s.n, s.n, false);
  }
  out += "D\n";
  detail::append_row(out, s.d.data(), s.n, false);
  out += "R\n";
  detail::append_row(out, s.r.data(), s.n, false);
  detail::append_labels(out, s.labels);
  out += "end\n";
  return out;
}

inline std::string serialize_category(
    PartialCategory const& c,
    std::optional<Relation> const& apc_order = std::nullopt) {
  if (c.n == 0) {
    throw std::invalid_argument("serialize_category: empty structure");
  }
  std::string out =
      "partialcategory\norder " + std::to_string(c.n) + "\ncomp\n";
  for (std::size_t x = 0; x < c.n; ++x) {
    detail::append_row(out, c.comp.data() + x * c.n, c.n, true);
  }
  out += "D\n";
  detail::append_row(out, c.d.data(), c.n, false);
  out += "R\n";
  detail::append_row(out, c.r.data(), c.n, false);
  if (apc_order) {
    detail::append_pair_block(out, "order", *apc_order);
  } else if (c.id_order) {
    detail::append_pair_block(out, "idorder", *c.id_order);
  }
  detail::append_labels(out, c.labels);
  out += "end\n";
  return out;
}

// ---------------------------------------------------------------------
// Check reports: a machine-readable tree form that parses back, and a
// human form.
// ---------------------------------------------------------------------

namespace detail {

inline void append_witness_line(std::string& out, char const* keyword,
                                Witness const& w) {
  out += keyword;
  out += ' ';
  out += w.law;
  for (element e : w.elems) {
    out += ' ';
    out += std::to_string(e);
  }
  out += '\n';
}

}  // namespace detail

inline std::string serialize_report(CheckReport const& rep) {
  std::string out = "report " + rep.name + "\n";
  if (rep.precondition_failed) {
    out += "precondition " + rep.note + "\nend\n";
    return out;
  }
  out += "holds ";
  out += rep.holds ? '1' : '0';
  out += "\nchecked " + std::to_string(rep.checked);
  out += "\nfailures " + std::to_string(rep.failure_count);
  out += '\n';
  for (auto const& w : rep.witnesses) {
    detail::append_witness_line(out, "witness", w);
  }
  if (!rep.internal_ok) {
    out += "internal-ok 0\n";
  }
  for (auto const& w : rep.internal_witnesses) {
    detail::append_witness_line(out, "internal-witness", w);
  }
  if (!rep.note.empty()) {
    out += "note " + rep.note + "\n";
  }
  out += "end\n";
  return out;
}

inline std::string serialize_reports(std::vector<CheckReport> const& reps) {
  std::string out;
  for (auto const& rep : reps) {
    out += serialize_report(rep);
  }
  return out;
}

inline std::vector<CheckReport> parse_reports(std::string_view src) {
  std::vector<CheckReport> out;
  std::istringstream in{std::string(src)};
  std::string line;
  std::size_t lineno = 0;
  CheckReport cur;
  bool open = false;
  auto fail = [&](std::string const& msg) {
    return ParseError(lineno, 1, msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) {
      continue;
    }
    if (key == "report") {
      if (open) {
        throw fail("report before previous 'end'");
      }
      cur = CheckReport{};
      if (!(ls >> cur.name)) {
        throw fail("report requires a name");
      }
      open = true;
      continue;
    }
    if (!open) {
      throw fail("expected 'report', found '" + key + "'");
    }
    if (key == "end") {
      out.push_back(std::move(cur));
      open = false;
    } else if (key == "precondition") {
      cur.precondition_failed = true;
      cur.holds = false;
      std::string rest;
      std::getline(ls, rest);
      cur.note = rest.empty() ? "" : rest.substr(1);
    } else if (key == "holds") {
      int v = 0;
      if (!(ls >> v) || (v != 0 && v != 1)) {
        throw fail("holds requires 0 or 1");
      }
      cur.holds = v == 1;
    } else if (key == "checked") {
      if (!(ls >> cur.checked)) {
        throw fail("checked requires a number");
      }
    } else if (key == "failures") {
      if (!(ls >> cur.failure_count)) {
        throw fail("failures requires a number");
      }
    } else if (key == "witness" || key == "internal-witness") {
      Witness w;
      if (!(ls >> w.law)) {
        throw fail("witness requires a law name");
      }
      element e = 0;
      while (ls >> e) {
        w.elems.push_back(e);
      }
      if (key == "witness") {
        cur.witnesses.push_back(std::move(w));
      } else {
        cur.internal_ok = false;
        cur.internal_witnesses.push_back(std::move(w));
      }
    } else if (key == "internal-ok") {
      int v = 0;
      if (!(ls >> v) || (v != 0 && v != 1)) {
        throw fail("internal-ok requires 0 or 1");
      }
      cur.internal_ok = v == 1;
    } else if (key == "note") {
      std::string rest;
      std::getline(ls, rest);
      cur.note = rest.empty() ? "" : rest.substr(1);
    } else {
      throw fail("unknown report line '" + key + "'");
    }
  }
  if (open) {
    throw fail("missing final 'end'");
  }
  return out;
}

inline std::string human_report(CheckReport const& rep) {
  std::string out;
  if (rep.precondition_failed) {
    out += "[pre ] " + rep.name + ": precondition failed";
    if (!rep.note.empty()) {
      out += " - " + rep.note;
    }
    out += '\n';
    return out;
  }
  if (rep.holds) {
    out += "[ ok ] " + rep.name + ": " + std::to_string(rep.checked)
           + " checks\n";
  } else {
    out += "[FAIL] " + rep.name + ": "
           + std::to_string(rep.failure_count) + " failure(s) in "
           + std::to_string(rep.checked) + " checks\n";
  }
  auto describe = [&](Witness const& w, char const* prefix) {
    out += std::string("  ") + prefix + w.law + " at (";
    for (std::size_t i = 0; i < w.elems.size(); ++i) {
      out += (i ? "," : "") + std::to_string(w.elems[i]);
    }
    out += ")\n";
  };
  for (auto const& w : rep.witnesses) {
    describe(w, "");
  }
  for (auto const& w : rep.internal_witnesses) {
    describe(w, "internal: ");
  }
  if (!rep.internal_ok && rep.internal_witnesses.empty()) {
    out += "  internal consistency violated\n";
  }
  if (!rep.note.empty()) {
    out += "  note: " + rep.note + "\n";
  }
  return out;
}

inline std::string human_reports(std::vector<CheckReport> const& reps) {
  std::string out;
  for (auto const& rep : reps) {
    out += human_report(rep);
  }
  return out;
}

// ---------------------------------------------------------------------
// Files and the corpus layout.
// ---------------------------------------------------------------------

inline std::string read_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

inline void write_file(std::filesystem::path const& path,
                       std::string_view content) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << content;
}

// Relative path and content for each corpus member, deterministic in
// corpus order: order<k>/<content-hash>.drs.
inline std::vector<std::pair<std::string, std::string>> corpus_file_plan(
    std::vector<BiunarySemigroup> const& members) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(members.size());
  for (auto const& s : members) {
    std::string content = serialize_semigroup(s);
    std::string name = "order" + std::to_string(s.n) + "/"
                       + hex64(fnv1a64(content)) + ".drs";
    out.emplace_back(std::move(name), std::move(content));
  }
  return out;
}

}  // namespace drcat
