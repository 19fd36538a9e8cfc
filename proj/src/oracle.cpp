#include "uxl/oracle.hpp"

#include <algorithm>

#include "uxl/error.hpp"

namespace uxl {

// --------------------------------------------------------------------------
// Finite brute force
// --------------------------------------------------------------------------

namespace {

// A family of subsets of {0..n-1} packed as one bit per subset mask.
using Family = std::uint64_t;

bool family_has(Family f, unsigned mask) { return (f >> mask) & 1u; }

Family principal_family(int n, int x) {
  Family f = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if ((mask >> x) & 1u) f |= Family{1} << mask;
  return f;
}

bool is_ultrafilter(int n, Family f) {
  unsigned full = (1u << n) - 1;
  if (!family_has(f, full) || family_has(f, 0)) return false;
  for (unsigned s = 0; s <= full; ++s) {
    if (family_has(f, s)) {
      for (unsigned t = 0; t <= full; ++t) {
        if ((t & s) == s && !family_has(f, t)) return false;      // upward closure
        if (family_has(f, t) && !family_has(f, s & t)) return false;  // meets
      }
    }
    bool comp = family_has(f, full & ~s);
    if (family_has(f, s) == comp) return false;  // maximality: exactly one side
  }
  return true;
}

}  // namespace

std::string FiniteBruteforceReport::to_text() const {
  std::string out = "n=" + std::to_string(n) + ": " + std::to_string(relation_instances) +
                    " relation checks, " + std::to_string(operation_instances) +
                    " operation checks";
  out += failures.empty() ? " (all agree)\n" : " (FAILURES)\n";
  for (const auto& f : failures) out += "  " + f + "\n";
  return out;
}

FiniteBruteforceReport finite_bruteforce(int n) {
  if (n < 1 || n > 6) throw OutOfRange("finite_bruteforce supports 1 <= n <= 6");
  FiniteBruteforceReport report;
  report.n = n;
  unsigned full = (1u << n) - 1;

  std::vector<Family> fam(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    fam[static_cast<std::size_t>(x)] = principal_family(n, x);
    if (!is_ultrafilter(n, fam[static_cast<std::size_t>(x)]))
      report.failures.push_back("principal family at " + std::to_string(x) +
                                " fails the ultrafilter axioms");
  }
  // No non-principal ultrafilters exist: the co-singletons meet in the empty
  // set, so a family avoiding every singleton would contain the empty set.
  unsigned co_meet = full;
  for (int x = 0; x < n; ++x) co_meet &= full & ~(1u << x);
  if (co_meet != 0)
    report.failures.push_back("co-singletons do not intersect to the empty set");

  struct Rel {
    const char* name;
    bool (*holds)(int, int);
  };
  const Rel rels[] = {
      {"<", [](int a, int b) { return a < b; }},
      {"<=", [](int a, int b) { return a <= b; }},
      {">", [](int a, int b) { return a > b; }},
      {">=", [](int a, int b) { return a >= b; }},
  };
  for (int xu = 0; xu < n; ++xu) {
    for (int xv = 0; xv < n; ++xv) {
      for (const auto& rel : rels) {
        ++report.relation_instances;
        unsigned middle = 0;  // {x : {y : x R y} in v}
        for (int x = 0; x < n; ++x) {
          unsigned inner = 0;
          for (int y = 0; y < n; ++y)
            if (rel.holds(x, y)) inner |= 1u << y;
          if (family_has(fam[static_cast<std::size_t>(xv)], inner)) middle |= 1u << x;
        }
        bool extended = family_has(fam[static_cast<std::size_t>(xu)], middle);
        bool original = rel.holds(xu, xv);
        if (extended != original)
          report.failures.push_back(std::string(rel.name) + " on (" + std::to_string(xu) + "," +
                                    std::to_string(xv) + "): extension " +
                                    (extended ? "true" : "false") + ", original " +
                                    (original ? "true" : "false"));
      }
      struct Op {
        const char* name;
        int (*apply)(int, int);
      };
      const Op ops[] = {
          {"min", [](int a, int b) { return a < b ? a : b; }},
          {"max", [](int a, int b) { return a < b ? b : a; }},
      };
      for (const auto& op : ops) {
        ++report.operation_instances;
        Family extended = 0;  // {S : {x : {y : F(x,y) in S} in v} in u}
        for (unsigned S = 0; S <= full; ++S) {
          unsigned middle = 0;
          for (int x = 0; x < n; ++x) {
            unsigned inner = 0;
            for (int y = 0; y < n; ++y)
              if ((S >> op.apply(x, y)) & 1u) inner |= 1u << y;
            if (family_has(fam[static_cast<std::size_t>(xv)], inner)) middle |= 1u << x;
          }
          if (family_has(fam[static_cast<std::size_t>(xu)], middle)) extended |= Family{1} << S;
        }
        Family expected = fam[static_cast<std::size_t>(op.apply(xu, xv))];
        if (extended != expected)
          report.failures.push_back(std::string(op.name) + "~ on (" + std::to_string(xu) + "," +
                                    std::to_string(xv) + ") is not the principal ultrafilter at " +
                                    std::to_string(op.apply(xu, xv)));
      }
    }
  }
  return report;
}

// --------------------------------------------------------------------------
// Symbolic oracles
// --------------------------------------------------------------------------

bool oracle_ext_rel(const OrderTerm& t, SegRel rel, const UltraToken& u, const UltraToken& v) {
  IntervalSet middle = transform_under_relation(t, rel, v);
  return interval_membership(t, middle, u);
}

namespace {

CompletionPos support_boundary(const OrderTerm& t, const UltraToken& v) {
  switch (v.support.kind()) {
    case Support::Kind::Point:
      return CompletionPos::elem(v.support.pos());
    case Support::Kind::LeftHalf:
      return cut_sup_pos(t, v.support.cut());
    case Support::Kind::RightHalf:
      return cut_inf_pos(t, v.support.cut());
  }
  throw Error("support_boundary: corrupt support");
}

// {y : op(x,y) in S} for a fixed x: (x in S ? the closed ray from x : empty)
// joined with S clipped strictly to the other side of x. Assembled raw and
// canonicalized once.
IntervalSet inner_set(const OrderTerm& t, MinMax op, const Pos& x, const IntervalSet& S) {
  CompletionPos at = CompletionPos::elem(x);
  std::vector<Interval> raw;
  Bound at_closed{at, true};
  Bound at_open{at, false};
  if (S.contains(x)) {
    if (op == MinMax::Min)
      raw.push_back(Interval{at_closed, Bound{CompletionPos::top(), false}});
    else
      raw.push_back(Interval{Bound{CompletionPos::bottom(), false}, at_closed});
  }
  for (const auto& iv : S.intervals()) {
    if (op == MinMax::Min) {
      // keep iv below x: tighten the upper bound to (x, open) when x is lower
      Ord o = completion_compare_checked(t, at, iv.hi.pos).ord;
      bool clip = o == Ord::LT || (o == Ord::EQ && iv.hi.closed);
      raw.push_back(Interval{iv.lo, clip ? at_open : iv.hi});
    } else {
      Ord o = completion_compare_checked(t, iv.lo.pos, at).ord;
      bool clip = o == Ord::LT || (o == Ord::EQ && iv.lo.closed);
      raw.push_back(Interval{clip ? at_open : iv.lo, iv.hi});
    }
  }
  return IntervalSet::from_intervals(t, std::move(raw));
}

}  // namespace

bool oracle_minmax_membership(const OrderTerm& t, MinMax op, const UltraToken& u,
                              const UltraToken& v, const IntervalSet& S) {
  if (t != S.term()) throw MixedTerms();
  // P(x) = [{y : op(x,y) in S} in v] is constant between the boundaries of S
  // and the support boundary of v; evaluate it once per region.
  std::vector<CompletionPos> breaks;
  auto add_break = [&](const CompletionPos& c) {
    if (c.kind() == CompletionPos::Kind::Bottom || c.kind() == CompletionPos::Kind::Top) return;
    for (const auto& other : breaks)
      if (other == c) return;
    breaks.push_back(c);
  };
  for (const auto& iv : S.intervals()) {
    add_break(iv.lo.pos);
    add_break(iv.hi.pos);
  }
  add_break(support_boundary(t, v));
  std::sort(breaks.begin(), breaks.end(), [&](const CompletionPos& a, const CompletionPos& b) {
    return completion_compare_checked(t, a, b).ord == Ord::LT;
  });

  std::vector<Interval> raw;
  auto region = [&](const CompletionPos& lo, const CompletionPos& hi) {
    auto x = witness_between(t, lo, hi);
    if (!x) return;
    if (interval_membership(t, inner_set(t, op, *x, S), v))
      raw.push_back(Interval{Bound{lo, false}, Bound{hi, false}});
  };
  CompletionPos cursor = CompletionPos::bottom();
  for (const auto& b : breaks) {
    region(cursor, b);
    if (b.is_elem() && interval_membership(t, inner_set(t, op, b.pos(), S), v))
      raw.push_back(Interval{Bound{b, true}, Bound{b, true}});
    cursor = b;
  }
  region(cursor, CompletionPos::top());
  return interval_membership(t, IntervalSet::from_intervals(t, std::move(raw)), u);
}

}  // namespace uxl
