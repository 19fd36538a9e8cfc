#include <doctest.h>

#include "uxl/s_builder.hpp"
#include "uxl/support.hpp"

using namespace uxl;

namespace {

const GapRegistry& reg() {
  static GapRegistry r = GapRegistry::standard();
  return r;
}

OrderTerm T(const char* s) { return parse_order_term(s); }

}  // namespace

TEST_CASE("local contributions") {
  OrderTerm e = T("e");
  auto block = local_contribution(e, Locus{Pos::rational(Rat(1, 2))});
  REQUIRE(block.size() == 3);
  CHECK(block[0].kind() == Support::Kind::LeftHalf);
  CHECK(block[1].kind() == Support::Kind::Point);
  CHECK(block[2].kind() == Support::Kind::RightHalf);

  auto gap_block = local_contribution(e, Locus{Cut::reg(reg().find("sqrt2"))});
  REQUIRE(gap_block.size() == 2);
  CHECK(gap_block[0].kind() == Support::Kind::LeftHalf);
  CHECK(gap_block[1].kind() == Support::Kind::RightHalf);

  OrderTerm w = T("w");
  auto point_only = local_contribution(w, Locus{Pos::nat(4)});
  REQUIRE(point_only.size() == 1);
  CHECK(point_only[0] == Support::point(Pos::nat(4)));

  // ends contribute one half when the order is unbounded on that side
  CHECK(local_contribution(w, Locus{top_cut(w)}).size() == 1);
  CHECK(local_contribution(w, Locus{bottom_cut(w)}).empty());
  // a jump contributes nothing
  CHECK(local_contribution(w, Locus{cut_after(w, Pos::nat(3))}).empty());
}

TEST_CASE("closed forms of s") {
  CHECK(s_of_term(T("1")) == T("1"));
  CHECK(s_of_term(T("4")) == T("4"));
  CHECK(s_of_term(T("w")) == T("w + 1"));
  CHECK(s_of_term(T("w*")) == T("1 + w*"));
  CHECK(s_of_term(T("w + w")) == T("w + w + 1"));
  CHECK(s_of_term(T("z")) == T("1 + z + 1"));
  CHECK(s_of_term(T("2 * z")) == normalize_term(T("1 + 2 * z + 1")));
  CHECK(s_of_term(T("w * z")) == normalize_term(T("1 + w * z + 1")));
  // w*w: the copy boundaries are limit points, each worth one extra support
  CHECK(s_of_term(T("w * w")) == normalize_term(T("w * w + 1")));
  CHECK(s_of_term(T("w + w*")) == T("w + 2 + w*"));
  // z*w: between consecutive copies of z sits a two-sided gap
  CHECK(s_of_term(T("z * w")) == normalize_term(T("1 + z + (2 + z) * w + 1")));
}

TEST_CASE("s rejects dense and empty input") {
  CHECK_THROWS_AS(s_of_term(T("e")), NotClosedForm);
  CHECK_THROWS_AS(s_of_term(T("w + e + w")), NotClosedForm);
  CHECK_THROWS_AS(s_of_term(T("0")), EmptyOrder);
  CHECK_THROWS_AS(s_iterate(T("w"), 0), OutOfRange);
}

TEST_CASE("iteration is not idempotent") {
  CHECK(s_iterate(T("w"), 1) == T("w + 1"));
  CHECK(s_iterate(T("w"), 2) == T("w + 2"));
  CHECK(s_iterate(T("w"), 5) == T("w + 5"));
  CHECK(s_iterate(T("w"), 2) != s_of_term(T("w")));
  CHECK(s_iterate(T("3"), 5) == T("3"));
  CHECK(s_iterate(T("z"), 2) == T("2 + z + 2"));
}

TEST_CASE("s(w + 1): the limit point gains a left-half neighbour") {
  // oracle for s_iterate(w, 2): enumerate the supports of w + 1 directly
  OrderTerm wp1 = T("w + 1");
  auto supports = enumerate_supports(wp1, reg(), 6);
  REQUIRE(supports.size() == 6 + 2);
  CHECK(support_to_string(wp1, supports[supports.size() - 2]) == "L:before:1.0");
  CHECK(support_to_string(wp1, supports[supports.size() - 1]) == "pt:1.0");
  for (std::size_t i = 0; i + 1 < supports.size(); ++i)
    CHECK(support_compare(wp1, supports[i], supports[i + 1]) == Ord::LT);
}

TEST_CASE("sampled points embed into the support order monotonically") {
  for (const char* text : {"w", "z", "w + w*", "z * w", "e"}) {
    OrderTerm t = T(text);
    auto pts = sample_elements(t, 5);
    auto supports = enumerate_supports(t, reg(), 5);
    for (const auto& p : pts) {
      bool found = false;
      for (const auto& s : supports)
        if (s == Support::point(p)) found = true;
      CHECK(found);
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      CHECK(support_compare(t, Support::point(pts[i]), Support::point(pts[i + 1])) == Ord::LT);
  }
}

TEST_CASE("dense profile of the rationals") {
  OrderTerm e = T("e");
  std::vector<Pos> pts = {Pos::rational(Rat(1, 2)), Pos::rational(Rat(0)),
                          Pos::rational(Rat(7, 4))};
  DenseProfileReport rep = dense_profile_check(e, reg(), pts, {"sqrt2", "sqrt3"}, 10);
  REQUIRE(rep.blocks.size() == 5);
  for (const auto& b : rep.blocks) {
    CHECK(b.consecutive);
    if (b.locus.rfind("gap:", 0) == 0) {
      CHECK(b.block_size == 2);
    } else {
      CHECK(b.block_size == 3);
    }
  }
  CHECK(rep.bottom_end_ok);
  CHECK(rep.top_end_ok);
  CHECK(rep.ok());
  CHECK_THROWS_AS(dense_profile_check(T("w"), reg(), {}, {}, 4), InvalidPosition);
}
