#include <doctest.h>

#include "uxl/engine.hpp"
#include "uxl/error.hpp"
#include "uxl/order_term.hpp"

using namespace uxl;
using K = OrderTerm::Kind;

namespace {

// Seeded structural generator for round-trip and idempotence properties.
OrderTerm random_term(std::uint64_t& state, int depth) {
  state = state * 6364136223846793005ull + 1442695040888963407ull;
  std::uint64_t pick = (state >> 33) % (depth > 0 ? 7 : 5);
  switch (pick) {
    case 0:
      return OrderTerm::fin((state >> 20) % 4);
    case 1:
      return OrderTerm::omega();
    case 2:
      return OrderTerm::omega_star();
    case 3:
      return OrderTerm::zeta();
    case 4:
      return OrderTerm::eta();
    case 5: {
      std::vector<OrderTerm> parts;
      std::size_t n = 2 + ((state >> 17) % 2);
      for (std::size_t i = 0; i < n; ++i) parts.push_back(random_term(state, depth - 1));
      return OrderTerm::sum(std::move(parts));
    }
    default:
      return OrderTerm::prod(random_term(state, depth - 1), random_term(state, depth - 1));
  }
}

}  // namespace

TEST_CASE("parsing the term grammar") {
  CHECK(parse_order_term("w + w*") ==
        OrderTerm::sum({OrderTerm::omega(), OrderTerm::omega_star()}));
  CHECK(parse_order_term("w * 2") == OrderTerm::prod(OrderTerm::omega(), OrderTerm::fin(2)));
  CHECK(parse_order_term("2 * w") == OrderTerm::prod(OrderTerm::fin(2), OrderTerm::omega()));
  CHECK_THROWS_AS(parse_order_term("w + + w"), SyntaxError);
  CHECK_THROWS_AS(parse_order_term("w*2"), SyntaxError);  // w* glues, then 2 dangles
  CHECK_THROWS_AS(parse_order_term(""), SyntaxError);
  CHECK_THROWS_AS(parse_order_term("q"), SyntaxError);
  CHECK(parse_order_term("w + w * 2") ==
        OrderTerm::sum({OrderTerm::omega(), OrderTerm::prod(OrderTerm::omega(), OrderTerm::fin(2))}));
  CHECK(parse_order_term("(w + 1) * z") ==
        OrderTerm::prod(OrderTerm::sum({OrderTerm::omega(), OrderTerm::fin(1)}), OrderTerm::zeta()));
  CHECK(parse_order_term("w + z + w*").arity() == 3);
}

TEST_CASE("print/parse round trip") {
  std::uint64_t state = 12345;
  for (int i = 0; i < 200; ++i) {
    OrderTerm t = random_term(state, 3);
    CHECK(parse_order_term(to_string(t)) == t);
  }
}

TEST_CASE("normalization of the arithmetic conventions") {
  // 2w = w and w2 = w + w
  CHECK(normalize_term(parse_order_term("2 * w")) == OrderTerm::omega());
  CHECK(normalize_term(parse_order_term("w * 2")) ==
        OrderTerm::sum({OrderTerm::omega(), OrderTerm::omega()}));
  CHECK(normalize_term(parse_order_term("2 * w*")) == OrderTerm::omega_star());
  CHECK(normalize_term(parse_order_term("1 + w")) == OrderTerm::omega());
  CHECK(normalize_term(parse_order_term("w* + 1")) == OrderTerm::omega_star());
  CHECK(normalize_term(parse_order_term("1 + w*")) ==
        OrderTerm::sum({OrderTerm::fin(1), OrderTerm::omega_star()}));
  CHECK(normalize_term(parse_order_term("1 + z")) ==
        OrderTerm::sum({OrderTerm::fin(1), OrderTerm::zeta()}));
  CHECK(normalize_term(parse_order_term("w + 1 + 1")) ==
        OrderTerm::sum({OrderTerm::omega(), OrderTerm::fin(2)}));
  CHECK(normalize_term(parse_order_term("1 * z")) == OrderTerm::zeta());
  CHECK(normalize_term(parse_order_term("z * 1")) == OrderTerm::zeta());
  CHECK(normalize_term(parse_order_term("w * 0")) == OrderTerm::fin(0));
  CHECK(normalize_term(parse_order_term("0 + w + 0")) == OrderTerm::omega());
  CHECK(normalize_term(parse_order_term("3 + 2 + w")) == OrderTerm::omega());
  // flattening and association
  CHECK(normalize_term(parse_order_term("(w + w) + w")).arity() == 3);
  CHECK(normalize_term(parse_order_term("(w * w) * w")) ==
        OrderTerm::prod(OrderTerm::omega(),
                        OrderTerm::prod(OrderTerm::omega(), OrderTerm::omega())));
  // distribution over an outer sum; the w-copies then absorb into w*w
  CHECK(normalize_term(parse_order_term("w * (2 + w)")) ==
        OrderTerm::prod(OrderTerm::omega(), OrderTerm::omega()));
  // trailing finite block in a product over w or z
  CHECK(normalize_term(parse_order_term("(w + 1) * w")) ==
        OrderTerm::prod(OrderTerm::omega(), OrderTerm::omega()));
  CHECK(normalize_term(parse_order_term("(w + 1) * z")) ==
        OrderTerm::prod(OrderTerm::omega(), OrderTerm::zeta()));
  // X + X*w collapses into the product
  CHECK(normalize_term(OrderTerm::sum({OrderTerm::omega(),
                                       OrderTerm::prod(OrderTerm::omega(), OrderTerm::omega())})) ==
        OrderTerm::prod(OrderTerm::omega(), OrderTerm::omega()));
}

TEST_CASE("1 + w is w: front enumeration bijection") {
  OrderTerm lhs = parse_order_term("1 + w");
  OrderTerm rhs = normalize_term(lhs);
  REQUIRE(rhs == OrderTerm::omega());
  auto a = enumerate_elements(lhs, Direction::Front, 10);
  auto e = enumerate_elements(rhs, Direction::Front, 10);
  REQUIRE(a.size() == e.size());
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    CHECK(pos_compare(a[i], a[i + 1]) == Ord::LT);
    CHECK(pos_compare(e[i], e[i + 1]) == Ord::LT);
  }
  CHECK(classify_position(lhs, a[0]).is_min);
  CHECK(classify_position(rhs, e[0]).is_min);
}

TEST_CASE("normalization is idempotent and preserves ends") {
  std::uint64_t state = 99;
  for (int i = 0; i < 300; ++i) {
    OrderTerm t = random_term(state, 3);
    OrderTerm n = normalize_term(t);
    CHECK(normalize_term(n) == n);
    if (!n.is_empty()) {
      CHECK(term_has_least(t) == term_has_least(n));
      CHECK(term_has_greatest(t) == term_has_greatest(n));
      CHECK(t.contains_eta() == n.contains_eta());
    }
  }
}

TEST_CASE("end and absorption queries") {
  CHECK(term_has_least(parse_order_term("w")));
  CHECK(!term_has_greatest(parse_order_term("w")));
  CHECK(!term_has_least(parse_order_term("z")));
  CHECK(term_has_least(parse_order_term("2 * z")) == false);
  CHECK(term_has_least(parse_order_term("w * w")));
  CHECK(!term_has_least(parse_order_term("w * z")));
  CHECK(omega_led(parse_order_term("w")));
  CHECK(omega_led(parse_order_term("w + w*")));
  CHECK(omega_led(parse_order_term("w * w")));
  CHECK(omega_led(parse_order_term("2 + w")));
  CHECK(!omega_led(parse_order_term("z")));
  CHECK(!omega_led(parse_order_term("w* + w")));
  CHECK(!omega_led(parse_order_term("w * z")));
  CHECK(omega_star_tailed(parse_order_term("w + w*")));
  CHECK(!omega_star_tailed(parse_order_term("w")));
}
