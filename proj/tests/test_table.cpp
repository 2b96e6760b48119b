#include "doctest.h"
#include "effalg/rational.hpp"
#include "effalg/sum_table.hpp"
#include "support.hpp"

using namespace effalg;

TEST_CASE("rationals print and parse as p/q") {
  CHECK(to_string(fraction(3, 6)) == "1/2");
  CHECK(to_string(fraction(-4, 2)) == "-2");
  CHECK(to_string(Rational(2, 4)) == "1/2");
  CHECK(fraction(2, 4) == Rational(1, 2));
  CHECK_THROWS_AS(fraction(1, 0), std::invalid_argument);
  CHECK(parse_rational("2/3") == Rational(2, 3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("cell codes order undefined below one below effects") {
  CHECK(CellValue::undefined() < CellValue::one());
  CHECK(CellValue::one() < CellValue::effect(2));
  CHECK(CellValue::effect(2) < CellValue::effect(3));
  CHECK(CellValue::zero_ref().element() == kZero);
  CHECK_FALSE(CellValue::undefined().element().has_value());
  CHECK(CellValue::effect(4).element() == 4);
}

TEST_CASE("trivial rows are implicit") {
  SumTable t(4);
  t.set_symmetric(2, 3, CellValue::one());
  CHECK(t.raw_sum(0, 3) == 3);
  CHECK(t.raw_sum(3, 0) == 3);
  CHECK(t.raw_sum(0, 1) == kOne);
  CHECK_FALSE(t.raw_sum(1, 2).has_value());
  CHECK_FALSE(t.raw_sum(1, 1).has_value());
  CHECK(t.raw_sum(2, 3) == kOne);
  CHECK_FALSE(t.raw_sum(2, 2).has_value());
}

TEST_CASE("structural errors") {
  CHECK_THROWS_AS(SumTable(1), StructuralError);
  SumTable t(4);
  CHECK_THROWS_AS(t.set(1, 2, CellValue::one()), StructuralError);
  CHECK_THROWS_AS(t.set(2, 4, CellValue::one()), StructuralError);
  CHECK_THROWS_AS(t.set(2, 3, CellValue::effect(7)), StructuralError);
  CHECK_THROWS_AS(SumTable(4, {{CellValue::one()}}), StructuralError);
}

TEST_CASE("labels are metadata") {
  auto a = testing::table("n = 4; labels: x y; x: - I; y: I -");
  auto b = testing::table("n = 4; e: - I; f: I -");
  CHECK(a == b);
  CHECK(a.label(2) == "x");
  CHECK(b.label(3) == "f");
  CHECK(default_labels(5) == std::vector<std::string>{"0", "I", "e", "f", "g"});
}

TEST_CASE("flattened upper triangle") {
  auto t = testing::table("n = 5; e: f g I; f: g I -; g: I - -");
  const auto flat = t.flattened_upper();
  REQUIRE(flat.size() == 6);
  CHECK(flat[0] == CellValue::effect(3));
  CHECK(flat[2] == CellValue::one());
  CHECK(flat[5] == CellValue::undefined());
}
