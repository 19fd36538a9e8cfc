#include <doctest.h>

#include "uxl/relations.hpp"

using namespace uxl;

namespace {

const GapRegistry& reg() {
  static GapRegistry r = GapRegistry::standard();
  return r;
}

}  // namespace

TEST_CASE("the extension restricted to principal tokens is the original order") {
  OrderTerm w = parse_order_term("w");
  UltraToken two = parse_token(w, reg(), "pt:2");
  UltraToken five = parse_token(w, reg(), "pt:5");
  CHECK(ext_rel(w, SegRel::LT, two, five));
  CHECK(ext_rel(w, SegRel::LE, two, five));
  CHECK(!ext_rel(w, SegRel::GT, two, five));
  CHECK(ext_rel(w, SegRel::GE, five, two));
  CHECK(!ext_rel(w, SegRel::LT, two, two));
  CHECK(ext_rel(w, SegRel::LE, two, two));
  CHECK(ext_rel(w, SegRel::GE, two, two));
}

TEST_CASE("reflexivity sits on the support side") {
  OrderTerm w = parse_order_term("w");
  UltraToken u = parse_token(w, reg(), "L:top#a");
  CHECK(ext_rel(w, SegRel::LT, u, u));  // u <~ u at a left half
  CHECK(!ext_rel(w, SegRel::GT, u, u));
  CHECK(reflexivity_kind(u) == ReflexivityKind::LtReflexive);

  OrderTerm z = parse_order_term("z");
  UltraToken b = parse_token(z, reg(), "R:bottom#a");
  CHECK(ext_rel(z, SegRel::GT, b, b));
  CHECK(!ext_rel(z, SegRel::LT, b, b));
  CHECK(reflexivity_kind(b) == ReflexivityKind::GtReflexive);

  CHECK(reflexivity_kind(parse_token(w, reg(), "pt:0")) == ReflexivityKind::Principal);
}

TEST_CASE("same right-half support: incomparable under <~, mutual under >~") {
  OrderTerm z = parse_order_term("z");
  UltraToken a = parse_token(z, reg(), "R:bottom#a");
  UltraToken b = parse_token(z, reg(), "R:bottom#b");
  CHECK(!ext_rel(z, SegRel::LT, a, b));
  CHECK(!ext_rel(z, SegRel::LT, b, a));
  CHECK(ext_rel(z, SegRel::GT, a, b));
  CHECK(ext_rel(z, SegRel::GT, b, a));
  // the extension does not commute with taking the inverse
  CHECK(ext_rel(z, SegRel::LE, a, b) != ext_rel(z, SegRel::GE, b, a));
}

TEST_CASE("same left-half support: antisymmetry fails") {
  OrderTerm w = parse_order_term("w");
  UltraToken a = parse_token(w, reg(), "L:top#a");
  UltraToken b = parse_token(w, reg(), "L:top#b");
  CHECK(ext_rel(w, SegRel::LT, a, b));
  CHECK(ext_rel(w, SegRel::LT, b, a));
  CHECK(!ext_rel(w, SegRel::GT, a, b));
  CHECK(!ext_rel(w, SegRel::GT, b, a));
}

TEST_CASE("non-principal tokens: strict and non-strict relations coincide") {
  OrderTerm t = parse_order_term("w + z + w*");
  auto tokens_of = [&](const char* lit) { return parse_token(t, reg(), lit); };
  std::vector<UltraToken> tokens = {
      tokens_of("L:at:structgap:0|1#a"), tokens_of("R:at:structgap:0|1#a"),
      tokens_of("L:at:structgap:1|2#a"), tokens_of("R:at:structgap:1|2#b")};
  for (const auto& u : tokens)
    for (const auto& v : tokens) {
      CHECK(ext_rel(t, SegRel::LT, u, v) == ext_rel(t, SegRel::LE, u, v));
      CHECK(ext_rel(t, SegRel::GT, u, v) == ext_rel(t, SegRel::GE, u, v));
    }
}

TEST_CASE("tri_leq is the support pre-order") {
  OrderTerm z = parse_order_term("z");
  UltraToken a = parse_token(z, reg(), "R:bottom#a");
  UltraToken b = parse_token(z, reg(), "R:bottom#b");
  CHECK(tri_leq(z, a, b));
  CHECK(tri_leq(z, b, a));
  CHECK(equiv(z, a, b));

  OrderTerm w = parse_order_term("w");
  UltraToken three = parse_token(w, reg(), "pt:3");
  UltraToken top = parse_token(w, reg(), "L:top#a");
  CHECK(tri_leq(w, three, top));
  CHECK(!tri_leq(w, top, three));
  CHECK(!equiv(w, three, top));
  CHECK(tri_leq(w, three, three));
  CHECK(tri_leq(w, top, top));

  // tri_leq(u, v) iff supp(u) <= supp(v)
  auto universe = {three, top, parse_token(w, reg(), "pt:0"), parse_token(w, reg(), "L:top#b")};
  for (const auto& u : universe)
    for (const auto& v : universe) {
      Ord sc = support_compare(w, u.support, v.support);
      CHECK(tri_leq(w, u, v) == (sc != Ord::GT));
      CHECK(equiv(w, u, v) == (sc == Ord::EQ));
    }
}
