#include <doctest.h>

#include <algorithm>

#include "uxl/skew_lattice.hpp"

using namespace uxl;

namespace {

const GapRegistry& reg() {
  static GapRegistry r = GapRegistry::standard();
  return r;
}

std::vector<UltraToken> zeta_universe(const OrderTerm& z) {
  return {parse_token(z, reg(), "pt:0"),        parse_token(z, reg(), "pt:1"),
          parse_token(z, reg(), "R:bottom#a"),  parse_token(z, reg(), "R:bottom#b"),
          parse_token(z, reg(), "L:top#a"),     parse_token(z, reg(), "L:top#b")};
}

const LawOutcome& law(const LawReport& report, const std::string& name) {
  for (const auto& l : report.laws)
    if (l.law == name) return l;
  REQUIRE(false);
  return report.laws.front();
}

// The swapped-branch mutant mangles min only; max stays the closed form.
UltraToken mutant_swapped_min(const OrderTerm& t, const UltraToken& u, const UltraToken& v) {
  return (ext_rel(t, SegRel::LE, u, v) || u == v) ? v : u;
}

// The weakened-branch mutant decides the min branch by the amalgam pre-order,
// losing the side information carried by <=~ on shared supports.
UltraToken mutant_tri_min(const OrderTerm& t, const UltraToken& u, const UltraToken& v) {
  return tri_leq(t, u, v) ? u : v;
}
UltraToken mutant_tri_max(const OrderTerm& t, const UltraToken& u, const UltraToken& v) {
  return tri_leq(t, u, v) ? v : u;
}

}  // namespace

TEST_CASE("min/max on the w example") {
  OrderTerm w = parse_order_term("w");
  UltraToken p = parse_token(w, reg(), "pt:5");
  UltraToken n = parse_token(w, reg(), "L:top#a");
  CHECK(ext_max(w, p, n) == n);
  CHECK(ext_max(w, n, p) == n);  // max lands on the non-principal side
  CHECK(ext_min(w, p, n) == p);
  CHECK(ext_min(w, n, p) == p);
  CHECK(ext_min(w, p, p) == p);
  CHECK(ext_max(w, n, n) == n);
}

TEST_CASE("min is left-zero and max right-zero on a shared left half") {
  OrderTerm w = parse_order_term("w");
  UltraToken a = parse_token(w, reg(), "L:top#a");
  UltraToken b = parse_token(w, reg(), "L:top#b");
  CHECK(ext_min(w, a, b) == a);
  CHECK(ext_min(w, b, a) == b);
  CHECK(ext_max(w, a, b) == b);
  CHECK(ext_max(w, b, a) == a);
  CHECK(equiv_class_kind(a) == ClassKind::MinLeftZero);
}

TEST_CASE("min is right-zero and max left-zero on a shared right half") {
  OrderTerm z = parse_order_term("z");
  UltraToken a = parse_token(z, reg(), "R:bottom#a");
  UltraToken b = parse_token(z, reg(), "R:bottom#b");
  CHECK(ext_min(z, a, b) == b);
  CHECK(ext_min(z, b, a) == a);
  CHECK(ext_max(z, a, b) == a);
  CHECK(equiv_class_kind(a) == ClassKind::MinRightZero);
  CHECK(equiv_class_kind(parse_token(z, reg(), "pt:0")) == ClassKind::Singleton);
}

TEST_CASE("D coincides with equal supports") {
  OrderTerm z = parse_order_term("z");
  auto universe = zeta_universe(z);
  for (const auto& u : universe)
    for (const auto& v : universe) CHECK(d_related(z, u, v) == equiv(z, u, v));
  CHECK(d_related(z, universe[2], universe[3]));
  CHECK(!d_related(z, universe[0], universe[1]));
  CHECK(d_related(z, universe[0], universe[0]));
}

TEST_CASE("laws on the canonical six-token universe") {
  OrderTerm z = parse_order_term("z");
  LawReport report = check_axioms(z, zeta_universe(z));
  CHECK(report.universe_size == 6);

  for (const char* name :
       {"associativity(min)", "associativity(max)", "idempotency(min)", "idempotency(max)",
        "absorption(min-max)", "absorption(max-min)", "absorption(min-max,right)",
        "absorption(max-min,right)", "quasi-triviality(min)", "quasi-triviality(max)",
        "min-max-duality", "commutativity-failure-set", "d-equals-equiv", "rectangular-classes",
        "degenerate-mixed-cases", "quotient-iso", "distributivity(sandwiched,min)",
        "distributivity(sandwiched,max)", "distributivity(min-over-max,right)",
        "distributivity(max-over-min,right)"}) {
    CHECK(law(report, name).status == LawStatus::Pass);
  }
  CHECK(law(report, "associativity(min)").instances == 216);

  // The one-sided distributive identities genuinely fail once two tokens share
  // a support and a third sits strictly on one side: with x,y on the bottom
  // right half and z above, min(x, max(y,z)) = x but max(min(x,y), min(x,z))
  // lands on y. Every reported counterexample contains a shared-support pair.
  const LawOutcome& d1 = law(report, "distributivity(min-over-max,left)");
  CHECK(d1.status == LawStatus::Fail);
  const LawOutcome& d2 = law(report, "distributivity(max-over-min,left)");
  CHECK(d2.status == LawStatus::Fail);
  CHECK(!d1.counterexamples.empty());
  CHECK(std::is_sorted(d1.counterexamples.begin(), d1.counterexamples.end()));

  auto universe = zeta_universe(z);
  auto mi = [&](const UltraToken& a, const UltraToken& b) { return ext_min(z, a, b); };
  auto ma = [&](const UltraToken& a, const UltraToken& b) { return ext_max(z, a, b); };
  for (const auto& x : universe)
    for (const auto& y : universe)
      for (const auto& w : universe) {
        bool holds = mi(x, ma(y, w)) == ma(mi(x, y), mi(x, w));
        if (!holds) {
          bool xy_shared = !(x == y) && support_compare(z, x.support, y.support) == Ord::EQ;
          bool xw_shared = !(x == w) && support_compare(z, x.support, w.support) == Ord::EQ;
          bool yw_shared = !(y == w) && support_compare(z, y.support, w.support) == Ord::EQ;
          CHECK((xy_shared || xw_shared || yw_shared));
        }
      }
}

TEST_CASE("noncommuting pairs are exactly the shared-support distinct pairs") {
  OrderTerm z = parse_order_term("z");
  auto universe = zeta_universe(z);
  std::size_t noncomm = 0;
  for (const auto& u : universe)
    for (const auto& v : universe) {
      bool expected = !(u == v) && support_compare(z, u.support, v.support) == Ord::EQ;
      CHECK((ext_min(z, u, v) != ext_min(z, v, u)) == expected);
      CHECK((ext_max(z, u, v) != ext_max(z, v, u)) == expected);
      if (expected) ++noncomm;
    }
  CHECK(noncomm == 4);  // the four ordered pairs over the two shared supports
}

TEST_CASE("principal-only universes commute and pass every law") {
  OrderTerm f3 = parse_order_term("3");
  std::vector<UltraToken> universe = {parse_token(f3, reg(), "pt:0"),
                                      parse_token(f3, reg(), "pt:1"),
                                      parse_token(f3, reg(), "pt:2")};
  LawReport report = check_axioms(f3, universe);
  for (const auto& l : report.laws) {
    if (l.law == "commutativity-failure-set") {
      CHECK(l.status == LawStatus::Vacuous);
    } else {
      CHECK(l.status == LawStatus::Pass);
    }
  }
}

TEST_CASE("the checker catches a swapped min branch through absorption") {
  OrderTerm z = parse_order_term("z");
  LawReport report = check_axioms(z, zeta_universe(z), mutant_swapped_min, ext_max);
  bool absorption_failed = law(report, "absorption(min-max)").status == LawStatus::Fail ||
                           law(report, "absorption(max-min)").status == LawStatus::Fail ||
                           law(report, "absorption(min-max,right)").status == LawStatus::Fail ||
                           law(report, "absorption(max-min,right)").status == LawStatus::Fail;
  CHECK(absorption_failed);
}

TEST_CASE("the checker catches the weakened branch through the class structure") {
  OrderTerm z = parse_order_term("z");
  LawReport clean = check_axioms(z, zeta_universe(z));
  CHECK(law(clean, "rectangular-classes").status == LawStatus::Pass);
  LawReport report = check_axioms(z, zeta_universe(z), mutant_tri_min, mutant_tri_max);
  CHECK(law(report, "rectangular-classes").status == LawStatus::Fail);
}

TEST_CASE("quotient lattices") {
  OrderTerm z = parse_order_term("z");
  QuotientLattice q = quotient_lattice(z, zeta_universe(z));
  REQUIRE(q.classes.size() == 4);
  CHECK(q.isomorphic_to_support_lattice);
  CHECK(q.classes[0].kind == ClassKind::MinRightZero);
  CHECK(q.classes[0].members.size() == 2);
  CHECK(q.classes[1].kind == ClassKind::Singleton);
  CHECK(q.classes[2].kind == ClassKind::Singleton);
  CHECK(q.classes[3].kind == ClassKind::MinLeftZero);
  // the induced table is the chain lattice on four classes
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(q.min_table[i][j] == std::min(i, j));
      CHECK(q.max_table[i][j] == std::max(i, j));
    }

  OrderTerm f3 = parse_order_term("3");
  QuotientLattice q3 = quotient_lattice(
      f3, {parse_token(f3, reg(), "pt:0"), parse_token(f3, reg(), "pt:1"),
           parse_token(f3, reg(), "pt:2")});
  CHECK(q3.classes.size() == 3);
  CHECK(q3.isomorphic_to_support_lattice);

  OrderTerm w = parse_order_term("w");
  QuotientLattice q1 = quotient_lattice(
      w, {parse_token(w, reg(), "L:top#a"), parse_token(w, reg(), "L:top#b")});
  CHECK(q1.classes.size() == 1);
  CHECK(q1.isomorphic_to_support_lattice);
}

TEST_CASE("law checking rejects an empty universe") {
  OrderTerm z = parse_order_term("z");
  CHECK_THROWS_AS(check_axioms(z, {}), EmptyUniverse);
  CHECK_THROWS_AS(quotient_lattice(z, {}), EmptyUniverse);
}
