#include <algorithm>

#include "doctest.h"
#include "effalg/effect_algebra.hpp"
#include "support.hpp"

using namespace effalg;

namespace {

bool has(const ValidationResult& r, ViolationKind k) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const ViolationReport& v) { return v.kind == k; });
}

bool has(const ValidationResult& r, ViolationKind k, std::vector<ElementId> witness) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const ViolationReport& v) { return v.kind == k && v.witness == witness; });
}

}  // namespace

TEST_CASE("catalog algebras validate") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const auto r = validate(e.algebra.table());
    CHECK(r.ok());
    CHECK(r.violations.empty());
  }
}

TEST_CASE("asymmetric table") {
  const auto r = validate(testing::table("n = 5; e: f g I; f: I - -; g: I - -"));
  CHECK_FALSE(r.ok());
  CHECK(has(r, ViolationKind::Symmetry, {2, 3}));
}

TEST_CASE("unit count per row") {
  const auto two = validate(testing::table("n = 4; e: I I; f: I -"));
  CHECK(has(two, ViolationKind::ComplementCount));
  const auto none = validate(testing::table("n = 4; e: - -; f: - I"));
  CHECK(has(none, ViolationKind::ComplementCount, {2}));
}

TEST_CASE("zero and self reference") {
  const auto zero = validate(testing::table("n = 4; e: 0 I; f: I -"));
  CHECK(has(zero, ViolationKind::ZeroInTable));
  const auto self = validate(testing::table("n = 4; e: e I; f: I -"));
  CHECK(has(self, ViolationKind::SelfInRow));
}

TEST_CASE("every violation is reported") {
  const auto r = validate(testing::table("n = 4; e: f I; f: I e"));
  CHECK(r.violations.size() >= 4);
  CHECK(has(r, ViolationKind::AssociativityDefinedness, {2, 2, 3}));
  CHECK(has(r, ViolationKind::RuleET6));
}

TEST_CASE("value mismatch under associativity") {
  // (e + e) + f = f + f = h, while e + (e + f) = e + g = I.
  const auto r = validate(testing::table("n = 6; e: f g I -; f: g h - I; g: I - - -; h: - I - -"));
  CHECK_FALSE(r.ok());
  CHECK(has(r, ViolationKind::AssociativityValue, {2, 2, 3}));
}

TEST_CASE("from_table throws with the violations") {
  try {
    EffectAlgebra::from_table(testing::table("n = 4; e: f I; f: I e"));
    FAIL("expected InvalidAlgebra");
  } catch (const InvalidAlgebra& e) {
    CHECK_FALSE(e.violations().empty());
  }
}

TEST_CASE("complements, order and difference") {
  const auto& s5 = testing::named("S5");
  CHECK(s5.complement_of(2) == 4);
  CHECK(s5.complement_of(3) == 3);
  CHECK(s5.complement_of(kZero) == kOne);
  CHECK(s5.leq(2, 3));
  CHECK(s5.leq(kZero, 2));
  CHECK(s5.leq(4, kOne));
  CHECK_FALSE(s5.leq(4, 2));
  CHECK(s5.ominus(4, 2) == 3);
  CHECK_FALSE(s5.ominus(2, 4).has_value());
  CHECK(s5.multiple(2, 4) == kOne);
  CHECK_FALSE(s5.multiple(2, 5).has_value());
  CHECK(s5.multiple(3, 0) == kZero);
  const auto c = s5.count_defined();
  CHECK(c.defined == 6);
  CHECK(c.undefined == 3);
}

TEST_CASE("derived laws hold on the catalog") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    CHECK(check_derived_laws(e.algebra).empty());
  }
}
