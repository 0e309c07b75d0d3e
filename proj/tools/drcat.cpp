// drcat: load finite DR-semigroups and (ample) partial categories, run
// condition checkers, execute the derived-category / pseudoproduct
// constructions, generate example families, and mine an enumerated
// corpus for structures matching a boolean predicate over conditions.
//
// Exit codes: 0 everything holds, 1 a checked condition fails (witnesses
// reported), 2 parse error (input file or command line), 3 precondition
// or cap failure, 4 internal consistency failure.

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "drcat/drcat.hpp"

namespace {

constexpr int EXIT_OK = 0;
constexpr int EXIT_CONDITION_FAILED = 1;
constexpr int EXIT_PARSE = 2;
constexpr int EXIT_PRECONDITION = 3;
constexpr int EXIT_INTERNAL = 4;

struct Config {
  std::string format = "human";
  std::size_t max_witnesses = 8;
  std::size_t cap_subsets = drcat::DEFAULT_SUBSET_CAP;
  std::size_t cap_order = 3;
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(std::string const& what) : std::runtime_error(what) {}
};

void emit(Config const& cfg, std::string const& text) {
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    drcat::write_file(cfg.out, text);
  }
}

void emit_reports(Config const& cfg,
                  std::vector<drcat::CheckReport> const& reps) {
  emit(cfg, cfg.format == "tree" ? drcat::serialize_reports(reps)
                                 : drcat::human_reports(reps));
}

int report_exit(std::vector<drcat::CheckReport> const& reps) {
  bool precondition = false;
  bool failed = false;
  bool internal = false;
  for (auto const& r : reps) {
    precondition = precondition || r.precondition_failed;
    failed = failed || !r.holds;
    internal = internal || !r.internal_ok;
  }
  if (internal) {
    return EXIT_INTERNAL;
  }
  if (precondition) {
    return EXIT_PRECONDITION;
  }
  if (failed) {
    return EXIT_CONDITION_FAILED;
  }
  return EXIT_OK;
}

drcat::AmplePartialCategory require_apc_input(drcat::ParsedCategory&& pc) {
  if (!pc.apc_order) {
    throw drcat::PreconditionError(
        "input carries no order block, but an ample partial category is "
        "required");
  }
  return {std::move(pc.category), std::move(*pc.apc_order)};
}

// ---------------------------------------------------------------------
// check
// ---------------------------------------------------------------------

int cmd_check(Config const& cfg, std::string const& path,
              std::vector<std::string> selectors) {
  auto const parsed = drcat::parse_structure(drcat::read_file(path));
  drcat::CheckOptions const opts{cfg.max_witnesses};
  std::vector<drcat::CheckReport> reps;
  if (auto const* s = std::get_if<drcat::BiunarySemigroup>(&parsed)) {
    if (selectors.empty()) {
      selectors = {"dr",    "congruence",        "cat-semigroup",
                   "ample", "generalized-ample", "projections-commute"};
    }
    for (auto const& sel : selectors) {
      if (sel == "dr") {
        reps.push_back(drcat::check_dr_axioms(*s, opts));
      } else if (sel == "congruence") {
        reps.push_back(drcat::check_congruence_conditions(*s, opts));
      } else if (sel == "cat-semigroup") {
        reps.push_back(drcat::check_cat_semigroup(*s, opts));
      } else if (sel == "ample") {
        reps.push_back(drcat::check_ample(*s, opts));
      } else if (sel == "generalized-ample") {
        reps.push_back(drcat::check_generalized_ample(*s, opts));
      } else if (sel == "projections-commute") {
        reps.push_back(drcat::check_projections_commute(*s, opts));
      } else {
        throw UsageError("unknown selector '" + sel
                         + "' for a DR-semigroup input");
      }
    }
  } else {
    auto const& pc = std::get<drcat::ParsedCategory>(parsed);
    if (selectors.empty()) {
      selectors = {"partial-category"};
      if (pc.apc_order) {
        selectors.push_back("apc");
      }
    }
    for (auto const& sel : selectors) {
      if (sel == "partial-category") {
        reps.push_back(drcat::check_partial_category(pc.category, opts));
      } else if (sel == "apc") {
        if (!pc.apc_order) {
          throw drcat::PreconditionError(
              "apc: input carries no order block");
        }
        reps.push_back(drcat::check_apc(pc.category, *pc.apc_order, opts));
      } else {
        throw UsageError("unknown selector '" + sel
                         + "' for a partial category input");
      }
    }
  }
  emit_reports(cfg, reps);
  return report_exit(reps);
}

// ---------------------------------------------------------------------
// derive
// ---------------------------------------------------------------------

int cmd_derive(Config const& cfg, std::string const& direction,
               std::string const& path) {
  auto parsed = drcat::parse_structure(drcat::read_file(path));
  if (direction == "cs") {
    auto const* s = std::get_if<drcat::BiunarySemigroup>(&parsed);
    if (!s) {
      throw drcat::PreconditionError(
          "derive cs expects a DR-semigroup input");
    }
    auto const c = drcat::derive_cs(*s);
    emit(cfg, drcat::serialize_category(c.pc, c.order));
    return EXIT_OK;
  }
  auto* pc = std::get_if<drcat::ParsedCategory>(&parsed);
  if (!pc) {
    throw drcat::PreconditionError(
        "derive sc expects a partial category input");
  }
  auto const apc = require_apc_input(std::move(*pc));
  emit(cfg, drcat::serialize_semigroup(drcat::pseudoproduct_semigroup(apc)));
  return EXIT_OK;
}

// ---------------------------------------------------------------------
// roundtrip
// ---------------------------------------------------------------------

int cmd_roundtrip(Config const& cfg, std::string const& path) {
  auto parsed = drcat::parse_structure(drcat::read_file(path));
  drcat::CheckOptions const opts{cfg.max_witnesses};
  std::vector<drcat::CheckReport> reps;
  if (auto const* s = std::get_if<drcat::BiunarySemigroup>(&parsed)) {
    reps.push_back(drcat::roundtrip_semigroup(*s, opts));
  } else {
    auto const apc = require_apc_input(
        std::move(std::get<drcat::ParsedCategory>(parsed)));
    reps.push_back(drcat::roundtrip_category(apc, opts));
  }
  emit_reports(cfg, reps);
  return report_exit(reps);
}

// ---------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------

std::size_t parse_count(std::string const& text, char const* what) {
  try {
    std::size_t pos = 0;
    auto const v = std::stoul(text, &pos);
    if (pos != text.size()) {
      throw std::invalid_argument(text);
    }
    return v;
  } catch (std::exception const&) {
    throw UsageError(std::string(what) + ": expected a number, got '" + text
                     + "'");
  }
}

long parse_long(std::string const& text, char const* what) {
  try {
    std::size_t pos = 0;
    auto const v = std::stol(text, &pos);
    if (pos != text.size()) {
      throw std::invalid_argument(text);
    }
    return v;
  } catch (std::exception const&) {
    throw UsageError(std::string(what) + ": expected an integer, got '"
                     + text + "'");
  }
}

drcat::Relation ground_order(std::string const& kind, std::size_t n,
                             char const* who) {
  if (kind == "chain") {
    return drcat::chain_order(n);
  }
  if (kind == "antichain") {
    return drcat::antichain_order(n);
  }
  throw UsageError(std::string(who) + ": expected 'chain' or 'antichain', got '"
                   + kind + "'");
}

void require_params(std::vector<std::string> const& params, std::size_t count,
                    char const* usage) {
  if (params.size() != count) {
    throw UsageError(std::string("expected: gen ") + usage);
  }
}

int cmd_gen(Config const& cfg, std::string const& family,
            std::vector<std::string> const& params) {
  using drcat::element;
  if (family == "posetal") {
    require_params(params, 2, "posetal chain|antichain N");
    auto const n = parse_count(params[1], "N");
    emit(cfg, drcat::serialize_category(
                  drcat::posetal_category(ground_order(params[0], n, "gen"))));
    return EXIT_OK;
  }
  if (family == "interval") {
    require_params(params, 3, "interval LO HI BOUND");
    auto const lo = parse_long(params[0], "LO");
    auto const hi = parse_long(params[1], "HI");
    auto const bound = parse_long(params[2], "BOUND");
    if (lo > hi || bound < 1) {
      throw UsageError("gen interval: need LO <= HI and BOUND >= 1");
    }
    emit(cfg, drcat::serialize_category(
                  drcat::interval_partial_category(lo, hi, bound)));
    return EXIT_OK;
  }
  if (family == "path") {
    if (params.size() < 2) {
      throw UsageError("expected: gen path MAXLEN NV [A-B ...]");
    }
    drcat::Digraph g;
    auto const maxlen = parse_count(params[0], "MAXLEN");
    g.num_vertices = parse_count(params[1], "NV");
    for (std::size_t i = 2; i < params.size(); ++i) {
      auto const dash = params[i].find('-');
      if (dash == std::string::npos) {
        throw UsageError("gen path: edges look like A-B, got '" + params[i]
                         + "'");
      }
      auto const a = parse_count(params[i].substr(0, dash), "edge");
      auto const b = parse_count(params[i].substr(dash + 1), "edge");
      if (a >= g.num_vertices || b >= g.num_vertices) {
        throw UsageError("gen path: edge endpoint out of range");
      }
      g.edges.emplace_back(static_cast<element>(a), static_cast<element>(b));
    }
    emit(cfg,
         drcat::serialize_category(drcat::path_category_truncation(g, maxlen)));
    return EXIT_OK;
  }
  if (family == "pso") {
    require_params(params, 2, "pso chain|antichain N");
    auto const n = parse_count(params[1], "N");
    drcat::QuasiOrderedSet x(n, ground_order(params[0], n, "gen pso"));
    emit(cfg, drcat::serialize_semigroup(drcat::pso_semigroup(x).semigroup));
    return EXIT_OK;
  }
  if (family == "closure") {
    if (params.empty()) {
      throw UsageError(
          "expected: gen closure identity|constant|downset-chain|"
          "downset-antichain N, or gen closure toplike");
    }
    auto const& kind = params[0];
    if (kind == "toplike") {
      require_params(params, 1, "closure toplike");
      // Ground set {0,1}: closing {0} sweeps in 1, while {1} is closed.
      emit(cfg, drcat::serialize_semigroup(
                    drcat::closure_powerset(2, {0b00, 0b11, 0b10, 0b11})));
      return EXIT_OK;
    }
    require_params(params, 2, "closure <kind> N");
    auto const n = parse_count(params[1], "N");
    if (n >= 20) {
      throw drcat::CapExceeded("gen closure: ground set too large");
    }
    std::uint32_t const total = std::uint32_t{1} << n;
    std::vector<std::uint32_t> cl(total);
    if (kind == "identity") {
      for (std::uint32_t t = 0; t < total; ++t) {
        cl[t] = t;
      }
    } else if (kind == "constant") {
      cl[0] = 0;
      for (std::uint32_t t = 1; t < total; ++t) {
        cl[t] = total - 1;
      }
    } else if (kind == "downset-chain") {
      cl = drcat::down_set_closure(drcat::chain_order(n));
    } else if (kind == "downset-antichain") {
      cl = drcat::down_set_closure(drcat::antichain_order(n));
    } else {
      throw UsageError("gen closure: unknown kind '" + kind + "'");
    }
    emit(cfg, drcat::serialize_semigroup(drcat::closure_powerset(n, cl)));
    return EXIT_OK;
  }
  if (family == "powerset") {
    require_params(params, 1, "powerset FILE");
    auto const pc = drcat::parse_category(drcat::read_file(params[0]));
    emit(cfg, drcat::serialize_semigroup(drcat::powerset_semigroup(
                  pc.category, cfg.cap_subsets)));
    return EXIT_OK;
  }
  if (family == "s5-example") {
    require_params(params, 0, "s5-example");
    auto const sc = drcat::interval_isometry_instance();
    std::string pinned;
    pinned += "fg=" + drcat::subset_label(sc.category, sc.fg) + "\n";
    pinned += "D(fg)=" + drcat::subset_label(sc.category, sc.d_fg) + "\n";
    pinned += "D(fD(g))=" + drcat::subset_label(sc.category, sc.d_f_dg)
              + "\n";
    std::cout << pinned;
    emit(cfg, drcat::serialize_semigroup(sc.induced.semigroup));
    return EXIT_OK;
  }
  throw UsageError("unknown family '" + family
                   + "' (posetal, interval, path, pso, closure, powerset, "
                     "s5-example)");
}

// ---------------------------------------------------------------------
// mine
// ---------------------------------------------------------------------

struct MemberFlags {
  bool dr = false;
  bool ample = false;
  bool congruence = false;
  bool cat_semigroup = false;
  bool generalized_ample = false;
  bool projections_commute = false;
  bool b_closed_dr = false;
  bool orders_coincide = false;
};

MemberFlags compute_flags(drcat::BiunarySemigroup const& s) {
  drcat::CheckOptions const one{1};
  MemberFlags f;
  f.dr = drcat::check_dr_axioms(s, one).holds;
  f.ample = drcat::check_ample(s, one).holds;
  f.congruence = drcat::check_congruence_conditions(s, one).holds;
  f.cat_semigroup = drcat::check_cat_semigroup(s, one).holds;
  f.generalized_ample = drcat::check_generalized_ample(s, one).holds;
  f.projections_commute = drcat::check_projections_commute(s, one).holds;
  f.orders_coincide = drcat::leq_r(s) == drcat::leq_l(s);
  auto const b = drcat::bideterministic(s);
  std::vector<bool> in_b(s.n, false);
  for (drcat::element x : b) {
    in_b[x] = true;
  }
  f.b_closed_dr = true;
  for (drcat::element x : b) {
    if (!in_b[s.d[x]] || !in_b[s.r[x]]) {
      f.b_closed_dr = false;
      break;
    }
  }
  return f;
}

using Predicate = std::function<bool(MemberFlags const&)>;

class PredicateParser {
 public:
  explicit PredicateParser(std::string const& text) { tokenize(text); }

  Predicate parse() {
    auto p = parse_or();
    if (pos_ < toks_.size()) {
      throw UsageError("predicate: unexpected '" + toks_[pos_] + "'");
    }
    return p;
  }

 private:
  void tokenize(std::string const& text) {
    std::size_t i = 0;
    auto word_char = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '-'
             || c == '_';
    };
    while (i < text.size()) {
      char const c = text[i];
      if (c == ' ' || c == '\t') {
        ++i;
      } else if (c == '(' || c == ')' || c == '!') {
        toks_.emplace_back(1, c);
        ++i;
      } else if (c == '&' || c == '|') {
        if (i + 1 >= text.size() || text[i + 1] != c) {
          throw UsageError(std::string("predicate: single '") + c
                           + "' (use " + c + c + ")");
        }
        toks_.push_back(std::string(2, c));
        i += 2;
      } else if (word_char(c)) {
        std::size_t j = i;
        while (j < text.size() && word_char(text[j])) {
          ++j;
        }
        toks_.push_back(text.substr(i, j - i));
        i = j;
      } else {
        throw UsageError(std::string("predicate: stray character '") + c
                         + "'");
      }
    }
  }

  bool at(std::string const& t) const {
    return pos_ < toks_.size() && toks_[pos_] == t;
  }

  Predicate parse_or() {
    auto lhs = parse_and();
    while (at("||")) {
      ++pos_;
      auto rhs = parse_and();
      lhs = [lhs, rhs](MemberFlags const& f) { return lhs(f) || rhs(f); };
    }
    return lhs;
  }

  Predicate parse_and() {
    auto lhs = parse_not();
    while (at("&&")) {
      ++pos_;
      auto rhs = parse_not();
      lhs = [lhs, rhs](MemberFlags const& f) { return lhs(f) && rhs(f); };
    }
    return lhs;
  }

  Predicate parse_not() {
    if (at("!")) {
      ++pos_;
      auto inner = parse_not();
      return [inner](MemberFlags const& f) { return !inner(f); };
    }
    if (at("(")) {
      ++pos_;
      auto inner = parse_or();
      if (!at(")")) {
        throw UsageError("predicate: missing ')'");
      }
      ++pos_;
      return inner;
    }
    if (pos_ >= toks_.size()) {
      throw UsageError("predicate: expected a condition flag");
    }
    auto const name = toks_[pos_++];
    static std::map<std::string, bool MemberFlags::*> const flags = {
        {"dr", &MemberFlags::dr},
        {"ample", &MemberFlags::ample},
        {"congruence", &MemberFlags::congruence},
        {"cat-semigroup", &MemberFlags::cat_semigroup},
        {"generalized-ample", &MemberFlags::generalized_ample},
        {"projections-commute", &MemberFlags::projections_commute},
        {"Dcommutes", &MemberFlags::projections_commute},
        {"BclosedDR", &MemberFlags::b_closed_dr},
        {"orders-coincide", &MemberFlags::orders_coincide},
    };
    auto const it = flags.find(name);
    if (it == flags.end()) {
      throw UsageError("predicate: unknown flag '" + name + "'");
    }
    auto const ptr = it->second;
    return [ptr](MemberFlags const& f) { return f.*ptr; };
  }

  std::vector<std::string> toks_;
  std::size_t pos_ = 0;
};

int cmd_mine(Config const& cfg, std::size_t max_order,
             std::string const& expr) {
  auto const predicate = PredicateParser(expr).parse();
  auto const corpus = drcat::enumerate_dr_corpus(max_order);
  std::string out;
  std::size_t matches = 0;
  for (auto const& s : corpus) {
    if (predicate(compute_flags(s))) {
      ++matches;
      auto const text = drcat::serialize_semigroup(s);
      out += "match order=" + std::to_string(s.n) + " hash="
             + drcat::hex64(drcat::fnv1a64(text)) + "\n";
      out += text;
    }
  }
  out += "matches " + std::to_string(matches) + "\n";
  emit(cfg, out);
  return EXIT_OK;
}

// ---------------------------------------------------------------------
// corpus build
// ---------------------------------------------------------------------

int cmd_corpus_build(Config const& cfg) {
  auto const members = drcat::enumerate_dr_corpus(cfg.cap_order);
  auto const plan = drcat::corpus_file_plan(members);
  std::filesystem::path const root = cfg.out.empty() ? "corpus" : cfg.out;
  std::string listing;
  for (auto const& [rel, content] : plan) {
    drcat::write_file(root / rel, content);
    listing += rel + "\n";
  }
  listing += "total " + std::to_string(plan.size()) + "\n";
  std::cout << listing;
  return EXIT_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Finite DR-semigroups, ample partial categories and the "
      "constructions between them"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"human", "tree"}))
      ->capture_default_str();
  app.add_option("--max-witnesses", cfg.max_witnesses,
                 "Witnesses kept per report")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cap-subsets", cfg.cap_subsets,
                 "Power-set materialization cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cap-order", cfg.cap_order, "Corpus enumeration order cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Write output here instead of stdout");

  std::string check_path;
  std::vector<std::string> check_selectors;
  auto* check = app.add_subcommand("check", "Run condition checkers on a file");
  check->add_option("file", check_path, "Structure file")->required();
  check->add_option("selectors", check_selectors,
                    "dr congruence cat-semigroup ample generalized-ample "
                    "projections-commute | partial-category apc");
  check->fallthrough();

  std::string derive_direction;
  std::string derive_path;
  auto* derive =
      app.add_subcommand("derive", "Derived category (cs) or pseudoproduct "
                                   "semigroup (sc)");
  derive->add_option("direction", derive_direction, "cs or sc")
      ->required()
      ->check(CLI::IsMember({"cs", "sc"}));
  derive->add_option("file", derive_path, "Structure file")->required();
  derive->fallthrough();

  std::string roundtrip_path;
  auto* roundtrip =
      app.add_subcommand("roundtrip", "Verify S(C(S)) = S or C(S(C)) = C");
  roundtrip->add_option("file", roundtrip_path, "Structure file")->required();
  roundtrip->fallthrough();

  std::string gen_family;
  std::vector<std::string> gen_params;
  auto* gen = app.add_subcommand("gen", "Generate an example structure");
  gen->add_option("family", gen_family,
                  "posetal interval path pso closure powerset s5-example")
      ->required();
  gen->add_option("params", gen_params, "Family parameters");
  gen->fallthrough();

  std::size_t mine_order = 0;
  std::vector<std::string> mine_expr;
  auto* mine = app.add_subcommand(
      "mine", "Scan the corpus for members matching a predicate");
  mine->add_option("maxorder", mine_order, "Largest order to enumerate")
      ->required();
  mine->add_option("expr", mine_expr,
                   "Boolean combination of condition flags with && || ! ()")
      ->required();
  mine->fallthrough();

  auto* corpus = app.add_subcommand("corpus", "Corpus operations");
  auto* corpus_build =
      corpus->add_subcommand("build", "Write the enumerated corpus to disk");
  corpus->fallthrough();
  corpus_build->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return EXIT_PARSE;
  }

  try {
    if (check->parsed()) {
      return cmd_check(cfg, check_path, check_selectors);
    }
    if (derive->parsed()) {
      return cmd_derive(cfg, derive_direction, derive_path);
    }
    if (roundtrip->parsed()) {
      return cmd_roundtrip(cfg, roundtrip_path);
    }
    if (gen->parsed()) {
      return cmd_gen(cfg, gen_family, gen_params);
    }
    if (mine->parsed()) {
      std::string expr;
      for (auto const& part : mine_expr) {
        expr += (expr.empty() ? "" : " ") + part;
      }
      return cmd_mine(cfg, mine_order, expr);
    }
    if (corpus->parsed()) {
      if (!corpus_build->parsed()) {
        throw UsageError("corpus: expected 'build'");
      }
      return cmd_corpus_build(cfg);
    }
    throw UsageError("no command given");
  } catch (drcat::ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return EXIT_PARSE;
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return EXIT_PARSE;
  } catch (drcat::PreconditionError const& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return EXIT_PRECONDITION;
  } catch (drcat::CapExceeded const& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return EXIT_PRECONDITION;
  } catch (drcat::NotSaturatedError const& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return EXIT_PRECONDITION;
  } catch (std::invalid_argument const& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return EXIT_PRECONDITION;
  } catch (std::logic_error const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return EXIT_INTERNAL;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_PRECONDITION;
  }
}
