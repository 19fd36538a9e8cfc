#include "uxl/harness.hpp"

#include <algorithm>
#include <chrono>
#include <future>

#include <json.hpp>

#include "uxl/error.hpp"

namespace uxl {

std::vector<std::string> standard_terms() {
  return {"1", "2",     "3",      "4",         "5",         "w",          "w*",
          "z", "e",     "w + w*", "w + z + w*", "w * w",     "z * w",      "2 * z"};
}

const std::vector<std::string>& SuiteConfig::known_suites() {
  static const std::vector<std::string> names = {
      "finite",     "theorem1",   "theorem2", "corollary1", "corollary2",
      "corollary3", "laws",       "quotient", "sbuilder"};
  return names;
}

SuiteConfig SuiteConfig::defaults() {
  SuiteConfig c;
  c.terms = standard_terms();
  c.suites = known_suites();
  c.eta_gaps = {"sqrt2", "sqrt3"};
  return c;
}

SuiteConfig SuiteConfig::from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  SuiteConfig c = defaults();
  try {
    if (j.contains("terms")) c.terms = j.at("terms").get<std::vector<std::string>>();
    if (j.contains("budget")) c.budget = j.at("budget").get<std::size_t>();
    if (j.contains("tokens_per_support"))
      c.tokens_per_support = j.at("tokens_per_support").get<std::size_t>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("suites")) c.suites = j.at("suites").get<std::vector<std::string>>();
    if (j.contains("eta_gaps")) c.eta_gaps = j.at("eta_gaps").get<std::vector<std::string>>();
    if (j.contains("sets_per_pair")) c.sets_per_pair = j.at("sets_per_pair").get<std::size_t>();
    if (j.contains("subset_check_cap"))
      c.subset_check_cap = j.at("subset_check_cap").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config field: ") + e.what());
  }
  return c;
}

namespace {

void validate_config(const SuiteConfig& c) {
  if (c.suites.empty()) throw ConfigError("suites list is empty");
  if (c.budget < 1) throw ConfigError("budget must be >= 1");
  if (c.terms.empty()) throw ConfigError("terms list is empty");
  for (const auto& s : c.suites) {
    const auto& known = SuiteConfig::known_suites();
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw ConfigError("unknown suite '" + s + "'");
  }
}

GapRegistry build_registry(const SuiteConfig& c) {
  GapRegistry std_reg = GapRegistry::standard();
  GapRegistry out;
  for (const auto& name : c.eta_gaps) {
    auto spec = std_reg.find(name);
    if (!spec) throw ConfigError("unknown eta gap '" + name + "'");
    out.register_gap(name, spec->below);
  }
  return out;
}

// Deterministic xorshift-based shuffle; std::shuffle is not pinned across
// standard libraries.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) {
    if (state == 0) state = 1;
  }
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

template <typename T>
void shuffle_vec(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

constexpr std::size_t kMaxStoredCex = 5;

struct EntryBuilder {
  SuiteEntry entry;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  EntryBuilder(std::string suite, std::string term) {
    entry.suite = std::move(suite);
    entry.term = std::move(term);
  }

  void check(bool ok, const std::string& inputs, const std::string& expected,
             const std::string& actual) {
    ++entry.instances;
    if (ok) {
      ++entry.passed;
    } else {
      ++entry.failed;
      if (entry.counterexamples.size() < kMaxStoredCex)
        entry.counterexamples.push_back(Counterexample{inputs, expected, actual});
    }
  }

  void vacuous() {
    ++entry.instances;
    ++entry.vacuous;
  }

  SuiteEntry finish() {
    entry.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return std::move(entry);
  }
};

const char* rel_name(SegRel rel) {
  switch (rel) {
    case SegRel::LT:
      return "<";
    case SegRel::LE:
      return "<=";
    case SegRel::GT:
      return ">";
    case SegRel::GE:
      return ">=";
  }
  return "?";
}

constexpr SegRel kRels[] = {SegRel::LT, SegRel::LE, SegRel::GT, SegRel::GE};

bool is_well_order_term(const OrderTerm& t) {
  switch (t.kind()) {
    case OrderTerm::Kind::Fin:
    case OrderTerm::Kind::Omega:
      return true;
    case OrderTerm::Kind::OmegaStar:
    case OrderTerm::Kind::Zeta:
    case OrderTerm::Kind::Eta:
      return false;
    case OrderTerm::Kind::Sum:
    case OrderTerm::Kind::Prod:
      for (const auto& p : t.parts())
        if (!is_well_order_term(p)) return false;
      return true;
  }
  return false;
}

// A small law universe in the spirit of the worked examples: a few principal
// tokens plus two tokens on each of (up to) one left-half and one right-half
// support.
std::vector<UltraToken> laws_universe(const OrderTerm& t, const GapRegistry& reg,
                                      std::size_t budget) {
  std::vector<Support> supports = enumerate_supports(t, reg, budget);
  std::vector<UltraToken> out;
  bool left_done = false, right_done = false;
  std::size_t points = 0;
  for (const auto& s : supports) {
    switch (s.kind()) {
      case Support::Kind::Point:
        if (points < 2) {
          out.push_back(make_token(t, s));
          ++points;
        }
        break;
      case Support::Kind::LeftHalf:
        if (!left_done) {
          out.push_back(make_token(t, s, "a"));
          out.push_back(make_token(t, s, "b"));
          left_done = true;
        }
        break;
      case Support::Kind::RightHalf:
        if (!right_done) {
          out.push_back(make_token(t, s, "a"));
          out.push_back(make_token(t, s, "b"));
          right_done = true;
        }
        break;
    }
    if (out.size() >= 6) break;
  }
  return out;
}

}  // namespace

std::vector<UltraToken> token_universe(const OrderTerm& t, const GapRegistry& reg,
                                       std::size_t budget, std::size_t tokens_per_support) {
  std::vector<UltraToken> out;
  static const char* alphabet = "abcdefghijklmnopqrstuvwxyz";
  for (const auto& s : enumerate_supports(t, reg, budget)) {
    if (s.is_point()) {
      out.push_back(make_token(t, s));
    } else {
      std::size_t count = std::max<std::size_t>(1, tokens_per_support);
      for (std::size_t i = 0; i < count; ++i) {
        std::string label = i < 26 ? std::string(1, alphabet[i]) : "t" + std::to_string(i);
        out.push_back(make_token(t, s, label));
      }
    }
  }
  return out;
}

std::vector<IntervalSet> sample_interval_sets(const OrderTerm& t, const UltraToken& u,
                                              const UltraToken& v, std::size_t budget,
                                              std::size_t limit) {
  std::vector<IntervalSet> sets;
  std::vector<Pos> pts = sample_elements(t, std::max<std::size_t>(2, (limit + 3) / 4));
  (void)budget;
  for (const auto& p : pts) {
    CompletionPos at = CompletionPos::elem(p);
    for (SegRel rel : kRels) sets.push_back(IntervalSet::from_segment(t, rel, at));
    if (sets.size() >= limit) break;
  }
  // Unions straddling the support boundaries of both tokens.
  for (const UltraToken* tok : {&u, &v}) {
    SupportKey key = support_key(t, tok->support);
    const Pos* below = nullptr;
    const Pos* above = nullptr;
    for (const auto& p : pts) {
      Ord o = completion_compare_checked(t, CompletionPos::elem(p), key.pos).ord;
      if (o == Ord::LT) below = &p;
      if (o == Ord::GT && !above) above = &p;
    }
    if (below && above) {
      sets.push_back(IntervalSet::from_segment(t, SegRel::LE, CompletionPos::elem(*below))
                         .unite(IntervalSet::from_segment(t, SegRel::GE, CompletionPos::elem(*above))));
    }
  }
  sets.push_back(IntervalSet::empty(t));
  sets.push_back(IntervalSet::all(t));
  while (sets.size() < limit) sets.push_back(sets[sets.size() % std::max<std::size_t>(1, 4)]);
  return sets;
}

namespace {

SuiteEntry run_finite(int n) {
  EntryBuilder b("finite", "n=" + std::to_string(n));
  FiniteBruteforceReport rep = finite_bruteforce(n);
  std::size_t total = rep.relation_instances + rep.operation_instances;
  for (std::size_t i = 0; i < total; ++i) ++b.entry.instances;
  b.entry.passed = total - rep.failures.size();
  b.entry.failed = rep.failures.size();
  for (const auto& f : rep.failures)
    if (b.entry.counterexamples.size() < kMaxStoredCex)
      b.entry.counterexamples.push_back(Counterexample{f, "agreement", "disagreement"});
  return b.finish();
}

SuiteEntry run_theorem1(const std::string& term_text, const OrderTerm& t, const GapRegistry& reg,
                        const SuiteConfig& cfg) {
  EntryBuilder b("theorem1", term_text);
  auto tokens = token_universe(t, reg, cfg.budget, cfg.tokens_per_support);
  for (const auto& u : tokens)
    for (const auto& v : tokens)
      for (SegRel rel : kRels) {
        bool closed = ext_rel(t, rel, u, v);
        bool oracle = oracle_ext_rel(t, rel, u, v);
        b.check(closed == oracle,
                token_to_string(t, u) + " " + rel_name(rel) + "~ " + token_to_string(t, v),
                oracle ? "true" : "false", closed ? "true" : "false");
      }
  return b.finish();
}

SuiteEntry run_theorem2(const std::string& term_text, const OrderTerm& t, const GapRegistry& reg,
                        const SuiteConfig& cfg) {
  EntryBuilder b("theorem2", term_text);
  auto tokens = token_universe(t, reg, cfg.budget, cfg.tokens_per_support);
  Rng rng(cfg.seed ^ fnv1a("theorem2:" + term_text));
  for (const auto& u : tokens) {
    for (const auto& v : tokens) {
      auto sets = sample_interval_sets(t, u, v, cfg.budget, cfg.sets_per_pair);
      shuffle_vec(sets, rng);
      UltraToken closed_min = ext_min(t, u, v);
      UltraToken closed_max = ext_max(t, u, v);
      for (const auto& S : sets) {
        bool oracle_min = oracle_minmax_membership(t, MinMax::Min, u, v, S);
        bool closed_min_member = interval_membership(t, S, closed_min);
        b.check(oracle_min == closed_min_member,
                "S=" + S.to_string() + " in min~(" + token_to_string(t, u) + "," +
                    token_to_string(t, v) + ")",
                oracle_min ? "true" : "false", closed_min_member ? "true" : "false");
        bool oracle_max = oracle_minmax_membership(t, MinMax::Max, u, v, S);
        bool closed_max_member = interval_membership(t, S, closed_max);
        b.check(oracle_max == closed_max_member,
                "S=" + S.to_string() + " in max~(" + token_to_string(t, u) + "," +
                    token_to_string(t, v) + ")",
                oracle_max ? "true" : "false", closed_max_member ? "true" : "false");
      }
    }
  }
  return b.finish();
}

SuiteEntry run_corollary1(const std::string& term_text, const OrderTerm& t, const GapRegistry& reg,
                          const SuiteConfig& cfg) {
  EntryBuilder b("corollary1", term_text);
  auto tokens = token_universe(t, reg, cfg.budget, cfg.tokens_per_support);
  auto lt = [&](const UltraToken& x, const UltraToken& y) { return ext_rel(t, SegRel::LT, x, y); };
  auto gt = [&](const UltraToken& x, const UltraToken& y) { return ext_rel(t, SegRel::GT, x, y); };
  // Transitivity over triples (all four relations).
  for (const auto& x : tokens)
    for (const auto& y : tokens)
      for (const auto& z : tokens)
        for (SegRel rel : kRels) {
          bool ok = !(ext_rel(t, rel, x, y) && ext_rel(t, rel, y, z)) || ext_rel(t, rel, x, z);
          b.check(ok,
                  "transitivity " + std::string(rel_name(rel)) + " at " + token_to_string(t, x) +
                      "," + token_to_string(t, y) + "," + token_to_string(t, z),
                  "transitive", "broken");
        }
  // Pairwise characterizations.
  for (const auto& u : tokens) {
    for (const auto& v : tokens) {
      Ord sc = support_compare(t, u.support, v.support);
      if (sc != Ord::EQ) {
        bool expected = sc == Ord::LT;
        bool row = lt(u, v) == expected && gt(v, u) == expected && lt(v, u) == !expected &&
                   gt(u, v) == !expected;
        b.check(row, "distinct supports " + token_to_string(t, u) + "," + token_to_string(t, v),
                "four-way equivalence", "broken");
      } else if (!(u == v)) {
        bool both_left = u.support.kind() == Support::Kind::LeftHalf;
        bool both_right = u.support.kind() == Support::Kind::RightHalf;
        if (both_left)
          b.check(lt(u, v) && lt(v, u) && !gt(u, v) && !gt(v, u),
                  "shared left half " + token_to_string(t, u) + "," + token_to_string(t, v),
                  "mutual <~ (antisymmetry failure)", "broken");
        if (both_right)
          b.check(!lt(u, v) && !lt(v, u) && gt(u, v) && gt(v, u),
                  "shared right half " + token_to_string(t, u) + "," + token_to_string(t, v),
                  "mutual >~ (connectedness failure)", "broken");
      }
    }
  }
  // Reflexivity classification.
  for (const auto& u : tokens) {
    bool ok = false;
    switch (reflexivity_kind(u)) {
      case ReflexivityKind::LtReflexive:
        ok = lt(u, u) && !gt(u, u);
        break;
      case ReflexivityKind::GtReflexive:
        ok = gt(u, u) && !lt(u, u);
        break;
      case ReflexivityKind::Principal:
        ok = !lt(u, u) && !gt(u, u) && ext_rel(t, SegRel::LE, u, u) && ext_rel(t, SegRel::GE, u, u);
        break;
    }
    b.check(ok, "reflexivity at " + token_to_string(t, u), "matches support side", "broken");
  }
  // Witness that <=~ does not commute with taking the inverse.
  {
    bool has_pair = false;
    bool found = false;
    for (const auto& u : tokens)
      for (const auto& v : tokens) {
        if (u == v) continue;
        if (support_compare(t, u.support, v.support) == Ord::EQ) has_pair = true;
        if (ext_rel(t, SegRel::LE, u, v) != ext_rel(t, SegRel::GE, v, u)) found = true;
      }
    if (!has_pair)
      b.vacuous();
    else
      b.check(found, "inverse non-commutation witness", "exists", "missing");
  }
  return b.finish();
}

SuiteEntry run_corollary2(const std::string& term_text, const OrderTerm& t, const GapRegistry& reg,
                          const SuiteConfig& cfg) {
  EntryBuilder b("corollary2", term_text);
  auto tokens = token_universe(t, reg, cfg.budget, cfg.tokens_per_support);
  for (const auto& u : tokens)
    b.check(tri_leq(t, u, u), "reflexivity at " + token_to_string(t, u), "true", "false");
  for (const auto& u : tokens)
    for (const auto& v : tokens) {
      b.check(tri_leq(t, u, v) || tri_leq(t, v, u),
              "totality " + token_to_string(t, u) + "," + token_to_string(t, v), "comparable",
              "incomparable");
      Ord sc = support_compare(t, u.support, v.support);
      b.check(tri_leq(t, u, v) == (sc != Ord::GT),
              "quotient order " + token_to_string(t, u) + "," + token_to_string(t, v),
              "tri_leq iff supp <=", "mismatch");
      b.check(equiv(t, u, v) == (sc == Ord::EQ),
              "equiv " + token_to_string(t, u) + "," + token_to_string(t, v),
              "equiv iff equal supports", "mismatch");
    }
  for (const auto& x : tokens)
    for (const auto& y : tokens)
      for (const auto& z : tokens)
        b.check(!(tri_leq(t, x, y) && tri_leq(t, y, z)) || tri_leq(t, x, z),
                "transitivity " + token_to_string(t, x) + "," + token_to_string(t, y) + "," +
                    token_to_string(t, z),
                "transitive", "broken");
  return b.finish();
}

SuiteEntry run_corollary3(const std::string& term_text, const OrderTerm& t, const GapRegistry& reg,
                          const SuiteConfig& cfg) {
  EntryBuilder b("corollary3", term_text);
  if (!is_well_order_term(t)) {
    b.vacuous();
    return b.finish();
  }
  auto tokens = token_universe(t, reg, cfg.budget, cfg.tokens_per_support);
  for (const auto& u : tokens)
    for (const auto& v : tokens)
      b.check(ext_rel(t, SegRel::LE, u, v) == tri_leq(t, u, v),
              "<=~ vs tri at " + token_to_string(t, u) + "," + token_to_string(t, v), "equal",
              "different");
  // Every nonempty token subset has a tri-least equivalence class.
  std::vector<UltraToken> pool = tokens;
  if (pool.size() > cfg.subset_check_cap)
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(cfg.subset_check_cap), pool.end());
  std::size_t m = pool.size();
  auto has_least = [&](std::uint64_t mask) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!((mask >> i) & 1)) continue;
      bool least = true;
      for (std::size_t j = 0; j < m; ++j)
        if (((mask >> j) & 1) && !tri_leq(t, pool[i], pool[j])) {
          least = false;
          break;
        }
      if (least) return true;
    }
    return false;
  };
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask)
    b.check(has_least(mask), "subset mask " + std::to_string(mask), "has tri-least class",
            "none");
  return b.finish();
}

SuiteEntry run_laws(const std::string& term_text, const OrderTerm& t, const GapRegistry& reg,
                    const SuiteConfig& cfg) {
  EntryBuilder b("laws", term_text);
  auto universe = laws_universe(t, reg, cfg.budget);
  if (universe.empty()) {
    b.vacuous();
    return b.finish();
  }
  LawReport report = check_axioms(t, universe);
  for (const auto& law : report.laws) {
    b.entry.instances += law.instances;
    if (law.status == LawStatus::Fail) {
      ++b.entry.failed;
      for (const auto& cex : law.counterexamples)
        if (b.entry.counterexamples.size() < kMaxStoredCex)
          b.entry.counterexamples.push_back(Counterexample{law.law + " " + cex, "law holds", "law fails"});
    } else if (law.status == LawStatus::Vacuous) {
      ++b.entry.vacuous;
    } else {
      b.entry.passed += law.instances;
    }
  }
  return b.finish();
}

SuiteEntry run_quotient(const std::string& term_text, const OrderTerm& t, const GapRegistry& reg,
                        const SuiteConfig& cfg) {
  EntryBuilder b("quotient", term_text);
  auto universe = laws_universe(t, reg, cfg.budget);
  if (universe.empty()) {
    b.vacuous();
    return b.finish();
  }
  try {
    QuotientLattice q = quotient_lattice(t, universe);
    b.check(q.isomorphic_to_support_lattice, "quotient vs support lattice", "isomorphic",
            "different");
    for (const auto& cls : universe) {
      ClassKind kind = equiv_class_kind(cls);
      bool ok = (cls.support.is_point()) == (kind == ClassKind::Singleton);
      b.check(ok, "class kind of " + token_to_string(t, cls), "matches support side", "broken");
    }
  } catch (const CongruenceViolation& e) {
    b.check(false, "congruence", "well-defined", e.what());
  }
  return b.finish();
}

SuiteEntry run_sbuilder(const std::string& term_text, const OrderTerm& t, const GapRegistry& reg,
                        const SuiteConfig& cfg) {
  EntryBuilder b("sbuilder", term_text);
  auto supports = enumerate_supports(t, reg, cfg.budget);
  // Strict ascending order under the support order.
  for (std::size_t i = 0; i + 1 < supports.size(); ++i)
    b.check(support_compare(t, supports[i], supports[i + 1]) == Ord::LT,
            "supports sorted at index " + std::to_string(i), "strictly ascending", "not");
  // Concatenating local contributions in locus order reproduces the order.
  {
    struct Item {
      CompletionPos at;
      std::vector<Support> block;
    };
    std::vector<Item> items;
    if (!term_has_least(t))
      items.push_back(Item{CompletionPos::bottom(), local_contribution(t, Locus{bottom_cut(t)})});
    for (const auto& p : sample_elements(t, cfg.budget))
      items.push_back(Item{CompletionPos::elem(p), local_contribution(t, Locus{p})});
    for (const auto& g : structural_gaps(t, cfg.budget))
      items.push_back(Item{CompletionPos::gap_at(g), local_contribution(t, Locus{g})});
    if (auto path = unique_eta_sum_path(t))
      for (const auto& spec : reg.all()) {
        Cut g = lift_cut_along_sum_path(t, *path, Cut::reg(spec));
        items.push_back(Item{CompletionPos::gap_at(g), local_contribution(t, Locus{g})});
      }
    if (!term_has_greatest(t))
      items.push_back(Item{CompletionPos::top(), local_contribution(t, Locus{top_cut(t)})});
    std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b2) {
      return completion_compare_checked(t, a.at, b2.at).ord == Ord::LT;
    });
    std::vector<Support> concat;
    for (auto& item : items)
      for (auto& s : item.block) concat.push_back(std::move(s));
    bool equal = concat.size() == supports.size();
    if (equal)
      for (std::size_t i = 0; i < concat.size(); ++i)
        if (!(concat[i] == supports[i])) {
          equal = false;
          break;
        }
    b.check(equal, "local contributions concatenated in locus order", "equal to enumeration",
            "different");
  }
  // Jumps contribute nothing: successor pairs admit no half-cut in between.
  for (const auto& p : sample_elements(t, std::min<std::size_t>(cfg.budget, 6))) {
    if (auto next = successor(t, p)) {
      bool left_invalid = false, right_invalid = false;
      try {
        make_support(t, Support::left_half(cut_before(t, *next)));
      } catch (const InvalidSupport&) {
        left_invalid = true;
      }
      try {
        make_support(t, Support::right_half(cut_after(t, p)));
      } catch (const InvalidSupport&) {
        right_invalid = true;
      }
      b.check(left_invalid && right_invalid, "jump at " + pos_to_string(p), "no half-cuts",
              "half-cut accepted");
    }
  }
  if (t.contains_eta()) {
    bool threw = false;
    try {
      s_of_term(t);
    } catch (const NotClosedForm&) {
      threw = true;
    }
    b.check(threw, "s_of_term on dense term", "NotClosedForm", "returned");
    std::vector<std::string> gap_names;
    for (const auto& spec : reg.all()) gap_names.push_back(spec->name);
    if (t.kind() == OrderTerm::Kind::Eta) {
      auto pts = sample_elements(t, std::min<std::size_t>(cfg.budget, 6));
      DenseProfileReport rep = dense_profile_check(t, reg, pts, gap_names, cfg.budget);
      for (const auto& blk : rep.blocks) {
        std::size_t expected = blk.locus.rfind("gap:", 0) == 0 ? 2 : 3;
        b.check(blk.block_size == expected && blk.consecutive, "dense block at " + blk.locus,
                std::to_string(expected) + " consecutive supports", "different");
      }
      b.check(rep.bottom_end_ok && rep.top_end_ok, "dense profile ends", "single support each",
              "violated");
    }
  } else {
    OrderTerm s = s_of_term(t);
    b.check(!s.is_empty(), "s_of_term closed form", "computed", "empty");
    // The enumerated support count is consistent with a fresh enumeration.
    b.check(supports.size() >= sample_elements(t, cfg.budget).size(),
            "every sampled point contributes", "supports >= points", "missing");
  }
  return b.finish();
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
  validate_config(config);
  GapRegistry reg = build_registry(config);
  std::vector<std::pair<std::string, OrderTerm>> terms;
  for (const auto& text : config.terms) terms.emplace_back(text, parse_order_term(text));

  SuiteReport report;
  report.config = config;
  // Entries are computed concurrently and joined in canonical order; every
  // task derives its randomness from (seed, suite, term) alone.
  std::vector<std::future<SuiteEntry>> tasks;
  for (const auto& suite : config.suites) {
    if (suite == "finite") {
      for (int n = 1; n <= 5; ++n)
        tasks.push_back(std::async(std::launch::deferred, run_finite, n));
      continue;
    }
    for (const auto& [text, t] : terms) {
      auto dispatch = [suite, &text, &t, &reg, &config]() {
        if (suite == "theorem1") return run_theorem1(text, t, reg, config);
        if (suite == "theorem2") return run_theorem2(text, t, reg, config);
        if (suite == "corollary1") return run_corollary1(text, t, reg, config);
        if (suite == "corollary2") return run_corollary2(text, t, reg, config);
        if (suite == "corollary3") return run_corollary3(text, t, reg, config);
        if (suite == "laws") return run_laws(text, t, reg, config);
        if (suite == "quotient") return run_quotient(text, t, reg, config);
        return run_sbuilder(text, t, reg, config);
      };
      tasks.push_back(std::async(std::launch::async, dispatch));
    }
  }
  for (auto& task : tasks) report.entries.push_back(task.get());
  return report;
}

bool SuiteReport::all_passed() const {
  for (const auto& e : entries)
    if (e.failed > 0) return false;
  return true;
}

std::string SuiteReport::to_json(bool include_timing) const {
  nlohmann::json j;
  j["seed"] = config.seed;
  j["budget"] = config.budget;
  j["tokens_per_support"] = config.tokens_per_support;
  j["terms"] = config.terms;
  j["suites"] = config.suites;
  j["eta_gaps"] = config.eta_gaps;
  j["all_passed"] = all_passed();
  auto& entries_json = j["entries"];
  entries_json = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json ej;
    ej["suite"] = e.suite;
    ej["term"] = e.term;
    ej["seed"] = config.seed;
    ej["instances"] = e.instances;
    ej["passed"] = e.passed;
    ej["failed"] = e.failed;
    ej["vacuous"] = e.vacuous;
    ej["wall_ms"] = include_timing ? e.wall_ms : 0;
    auto& cexs = ej["counterexamples"];
    cexs = nlohmann::json::array();
    for (const auto& c : e.counterexamples) {
      nlohmann::json cj;
      cj["inputs"] = c.inputs;
      cj["expected"] = c.expected;
      cj["actual"] = c.actual;
      cexs.push_back(std::move(cj));
    }
    entries_json.push_back(std::move(ej));
  }
  return j.dump(2);
}

std::string SuiteReport::to_text() const {
  std::string out;
  for (const auto& e : entries) {
    out += e.suite + " [" + e.term + "]: " + std::to_string(e.passed) + "/" +
           std::to_string(e.instances) + " passed";
    if (e.vacuous) out += ", " + std::to_string(e.vacuous) + " vacuous";
    if (e.failed) out += ", " + std::to_string(e.failed) + " FAILED";
    out += " (" + std::to_string(e.wall_ms) + " ms)\n";
    for (const auto& c : e.counterexamples)
      out += "    " + c.inputs + ": expected " + c.expected + ", got " + c.actual + "\n";
  }
  out += all_passed() ? "ALL SUITES PASSED\n" : "SUITE FAILURES PRESENT\n";
  return out;
}

}  // namespace uxl
