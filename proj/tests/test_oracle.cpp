#include <doctest.h>

#include "uxl/oracle.hpp"
#include "uxl/relations.hpp"
#include "uxl/skew_lattice.hpp"

using namespace uxl;

namespace {

const GapRegistry& reg() {
  static GapRegistry r = GapRegistry::standard();
  return r;
}

}  // namespace

TEST_CASE("finite brute force agrees with the original structure") {
  for (int n = 1; n <= 6; ++n) {
    FiniteBruteforceReport rep = finite_bruteforce(n);
    CHECK(rep.ok());
    CHECK(rep.relation_instances == static_cast<std::size_t>(n) * n * 4);
    CHECK(rep.operation_instances == static_cast<std::size_t>(n) * n * 2);
  }
  CHECK_THROWS_AS(finite_bruteforce(0), OutOfRange);
  CHECK_THROWS_AS(finite_bruteforce(7), OutOfRange);
}

TEST_CASE("definitional relation oracle on the worked examples") {
  OrderTerm w = parse_order_term("w");
  UltraToken three = parse_token(w, reg(), "pt:3");
  UltraToken top = parse_token(w, reg(), "L:top#a");
  // every x satisfies X_{>x} in v when v concentrates at the top
  CHECK(transform_under_relation(w, SegRel::LT, top) == IntervalSet::all(w));
  CHECK(oracle_ext_rel(w, SegRel::LT, three, top));

  OrderTerm z = parse_order_term("z");
  UltraToken bottom = parse_token(z, reg(), "R:bottom#a");
  UltraToken zero = parse_token(z, reg(), "pt:0");
  // {x : X_{<x} in 0~} = X_{>0}, which misses the bottom-concentrated token
  CHECK(transform_under_relation(z, SegRel::GT, zero) ==
        IntervalSet::from_segment(z, SegRel::GT, CompletionPos::elem(Pos::integer(0))));
  CHECK(!oracle_ext_rel(z, SegRel::GT, bottom, zero));
  CHECK(oracle_ext_rel(z, SegRel::GT, zero, bottom));
  CHECK(oracle_ext_rel(z, SegRel::GT, bottom, zero) == ext_rel(z, SegRel::GT, bottom, zero));
  CHECK(oracle_ext_rel(z, SegRel::GT, zero, bottom) == ext_rel(z, SegRel::GT, zero, bottom));

  for (const char* lit : {"pt:0", "pt:5"}) {
    UltraToken x = parse_token(w, reg(), lit);
    CHECK(!oracle_ext_rel(w, SegRel::LT, x, x));
    CHECK(oracle_ext_rel(w, SegRel::LE, x, x));
    CHECK(oracle_ext_rel(w, SegRel::GE, x, x));
  }
}

TEST_CASE("definitional min/max membership on the worked examples") {
  OrderTerm w = parse_order_term("w");
  UltraToken two = parse_token(w, reg(), "pt:2");
  UltraToken top = parse_token(w, reg(), "L:top#a");
  IntervalSet le2 = IntervalSet::from_segment(w, SegRel::LE, CompletionPos::elem(Pos::nat(2)));
  CHECK(oracle_minmax_membership(w, MinMax::Min, two, top, le2));
  CHECK(ext_min(w, two, top) == two);
  CHECK(interval_membership(w, le2, two));
  CHECK(!oracle_minmax_membership(w, MinMax::Max, two, top, le2));
  CHECK(ext_max(w, two, top) == top);

  // idempotent case: membership reduces to the token itself
  for (const char* lit : {"pt:2", "L:top#a"}) {
    UltraToken u = parse_token(w, reg(), lit);
    for (const auto& p : sample_elements(w, 5)) {
      IntervalSet S = IntervalSet::from_segment(w, SegRel::GE, CompletionPos::elem(p));
      CHECK(oracle_minmax_membership(w, MinMax::Min, u, u, S) == interval_membership(w, S, u));
      CHECK(oracle_minmax_membership(w, MinMax::Max, u, u, S) == interval_membership(w, S, u));
    }
  }
}

TEST_CASE("region splitting handles gaps and unions") {
  OrderTerm e = parse_order_term("e");
  UltraToken u = parse_token(e, reg(), "R:at:gap:sqrt2#a");
  UltraToken v = parse_token(e, reg(), "L:at:gap:sqrt3#a");
  IntervalSet straddle =
      IntervalSet::from_segment(e, SegRel::LE, CompletionPos::elem(Pos::rational(Rat(1))))
          .unite(IntervalSet::from_segment(e, SegRel::GE,
                                           CompletionPos::elem(Pos::rational(Rat(7, 4)))));
  UltraToken closed_min = ext_min(e, u, v);
  UltraToken closed_max = ext_max(e, u, v);
  CHECK(oracle_minmax_membership(e, MinMax::Min, u, v, straddle) ==
        interval_membership(e, straddle, closed_min));
  CHECK(oracle_minmax_membership(e, MinMax::Max, u, v, straddle) ==
        interval_membership(e, straddle, closed_max));
}
