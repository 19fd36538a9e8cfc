#include <doctest.h>

#include "uxl/rational.hpp"

using namespace uxl;

TEST_CASE("rational literals") {
  CHECK(rat_to_string(Rat(3)) == "3");
  CHECK(rat_to_string(Rat(-7, 2)) == "-7/2");
  CHECK(rat_from_string("3/6").value() == Rat(1, 2));
  CHECK(rat_from_string("-2").value() == Rat(-2));
  CHECK(!rat_from_string("1/0").has_value());
  CHECK(!rat_from_string("x").has_value());
  CHECK(!rat_from_string("").has_value());
}

TEST_CASE("sqrt predicates bracket the root") {
  // convergents of sqrt(2): 1, 3/2, 7/5, 17/12, 41/29
  CHECK(below_sqrt2(Rat(1)));
  CHECK(below_sqrt2(Rat(9, 8)));
  CHECK(below_sqrt2(Rat(7, 5)));
  CHECK(!below_sqrt2(Rat(3, 2)));
  CHECK(!below_sqrt2(Rat(17, 12)));
  CHECK(below_sqrt2(Rat(-100)));
  CHECK(below_sqrt3(Rat(12, 7)));
  CHECK(!below_sqrt3(Rat(7, 4)));
}

TEST_CASE("e-2 predicate decided by convergents") {
  // convergents of e-2: 1, 2/3, 3/4, 5/7, 23/32, ...
  CHECK(below_e_minus_2(Rat(2, 3)));
  CHECK(below_e_minus_2(Rat(5, 7)));
  CHECK(!below_e_minus_2(Rat(3, 4)));
  CHECK(!below_e_minus_2(Rat(23, 32)));
  CHECK(below_e_minus_2(Rat(718, 1000)));
  CHECK(!below_e_minus_2(Rat(719, 1000)));
  CHECK(below_e_minus_2(Rat(0)));
  CHECK(!below_e_minus_2(Rat(1)));
}

TEST_CASE("stern-brocot finds the simplest rational in an interval") {
  auto lo = [](const Rat& q) { return q <= Rat(1, 3); };
  auto hi = [](const Rat& q) { return q >= Rat(1, 2); };
  CHECK(stern_brocot_between(lo, hi).value() == Rat(2, 5));

  auto lo2 = [](const Rat& q) { return q <= Rat(-5); };
  auto hi2 = [](const Rat& q) { return q >= Rat(-4); };
  CHECK(stern_brocot_between(lo2, hi2).value() > Rat(-5));
  CHECK(stern_brocot_between(lo2, hi2).value() < Rat(-4));

  // touching cuts have no separator; the budget runs out
  auto lo3 = [](const Rat& q) { return q < Rat(0); };
  auto hi3 = [](const Rat& q) { return q >= Rat(0); };
  CHECK(!stern_brocot_between(lo3, hi3).has_value());
}

TEST_CASE("dyadic ladder") {
  CHECK(dyadic_sample(0) == Rat(0));
  CHECK(dyadic_sample(1) == Rat(1));
  CHECK(dyadic_sample(2) == Rat(1, 2));
  CHECK(dyadic_sample(3) == Rat(3, 2));
  CHECK(dyadic_sample(4) == Rat(1, 4));
  CHECK(dyadic_sample(5) == Rat(3, 4));
  CHECK(dyadic_sample(7) == Rat(7, 4));
  CHECK(dyadic_sample(8) == Rat(1, 8));
  for (std::size_t i = 0; i < 64; ++i)
    for (std::size_t j = i + 1; j < 64; ++j) CHECK(dyadic_sample(i) != dyadic_sample(j));
}
