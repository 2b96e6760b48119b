#include "effalg/effect_algebra.hpp"

#include <sstream>

namespace effalg {

namespace {

std::string name_of(const SumTable& t, ElementId e) { return t.label(e); }

std::string describe(const SumTable& t, std::optional<ElementId> v) {
  return v ? name_of(t, *v) : std::string("undefined");
}

void check_structure(const SumTable& t, std::vector<ViolationReport>& out) {
  const int n = t.order();
  for (ElementId a = 2; a < n; ++a)
    for (ElementId b = a + 1; b < n; ++b)
      if (t.cell(a, b) != t.cell(b, a))
        out.push_back({ViolationKind::Symmetry, {a, b},
                       "cell (" + name_of(t, a) + "," + name_of(t, b) + ") differs from (" + name_of(t, b) + "," +
                           name_of(t, a) + ")"});

  for (ElementId a = 2; a < n; ++a) {
    int ones = 0;
    for (ElementId b = 2; b < n; ++b) ones += t.cell(a, b).is_one() ? 1 : 0;
    if (ones != 1)
      out.push_back({ViolationKind::ComplementCount, {a},
                     "row " + name_of(t, a) + " contains the unit " + std::to_string(ones) + " times, expected once"});
  }

  for (ElementId a = 2; a < n; ++a)
    for (ElementId b = 2; b < n; ++b) {
      CellValue v = t.cell(a, b);
      if (v.is_zero_ref())
        out.push_back({ViolationKind::ZeroInTable, {a, b},
                       "the zero effect appears at (" + name_of(t, a) + "," + name_of(t, b) + ")"});
      else if (v.is_effect() && (v.code() == a || v.code() == b))
        out.push_back({ViolationKind::SelfInRow, {a, b},
                       name_of(t, a) + " + " + name_of(t, b) + " = " + name_of(t, v.code()) +
                           " repeats a summand"});
    }
}

void check_associativity(const SumTable& t, std::vector<ViolationReport>& out) {
  const int n = t.order();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      const auto ab = t.raw_sum(a, b);
      for (ElementId c = 0; c < n; ++c) {
        const auto bc = t.raw_sum(b, c);
        const auto lhs = ab ? t.raw_sum(*ab, c) : std::nullopt;
        const auto rhs = bc ? t.raw_sum(a, *bc) : std::nullopt;
        const std::string l = "(" + name_of(t, a) + " + " + name_of(t, b) + ") + " + name_of(t, c);
        const std::string r = name_of(t, a) + " + (" + name_of(t, b) + " + " + name_of(t, c) + ")";
        if (lhs.has_value() != rhs.has_value()) {
          out.push_back({ViolationKind::AssociativityDefinedness, {a, b, c},
                         lhs ? l + " is defined but " + r + " is not" : r + " is defined but " + l + " is not"});
        } else if (lhs && *lhs != *rhs) {
          out.push_back({ViolationKind::AssociativityValue, {a, b, c},
                         l + " = " + describe(t, lhs) + " but " + r + " = " + describe(t, rhs)});
        }
      }
    }
}

// Rules ET5-ET7 and cancellation. Only meaningful once the structural rules hold.
void check_derived_table_rules(const SumTable& t, std::vector<ViolationReport>& out) {
  const int n = t.order();
  for (ElementId a = 2; a < n; ++a)
    for (ElementId b = 2; b < n; ++b) {
      if (a < b && t.cell(a, a).is_one() && t.cell(b, b).is_one() && t.cell(a, b).is_defined())
        out.push_back({ViolationKind::RuleET5, {a, b},
                       "self-complementary " + name_of(t, a) + " and " + name_of(t, b) + " have a defined sum"});
      if (a != b && t.cell(a, b).is_one() && t.cell(a, a).is_defined() && t.cell(b, b).is_defined())
        out.push_back({ViolationKind::RuleET6, {a, b},
                       name_of(t, a) + " + " + name_of(t, a) + " and its complement's double " + name_of(t, b) +
                           " + " + name_of(t, b) + " are both defined"});
      if (t.cell(a, a).is_effect() && t.cell(a, a).code() == b && t.cell(b, b).is_defined() &&
          t.cell(a, b).is_undefined())
        out.push_back({ViolationKind::RuleET7, {a, b},
                       name_of(t, a) + " + " + name_of(t, a) + " = " + name_of(t, b) + " and " + name_of(t, b) +
                           " + " + name_of(t, b) + " is defined, but " + name_of(t, a) + " + " + name_of(t, b) +
                           " is not"});
    }
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = b + 1; c < n; ++c) {
        auto x = t.raw_sum(a, b);
        if (x && x == t.raw_sum(a, c))
          out.push_back({ViolationKind::CancellationDerived, {a, b, c},
                         name_of(t, a) + " + " + name_of(t, b) + " = " + name_of(t, a) + " + " + name_of(t, c) +
                             " with " + name_of(t, b) + " != " + name_of(t, c)});
      }
}

}  // namespace

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Symmetry: return "Symmetry";
    case ViolationKind::ComplementCount: return "ComplementCount";
    case ViolationKind::ZeroInTable: return "ZeroInTable";
    case ViolationKind::SelfInRow: return "SelfInRow";
    case ViolationKind::RuleET5: return "RuleET5";
    case ViolationKind::RuleET6: return "RuleET6";
    case ViolationKind::RuleET7: return "RuleET7";
    case ViolationKind::AssociativityDefinedness: return "AssociativityDefinedness";
    case ViolationKind::AssociativityValue: return "AssociativityValue";
    case ViolationKind::CancellationDerived: return "CancellationDerived";
    case ViolationKind::DerivedLaw: return "DerivedLaw";
  }
  return "Unknown";
}

bool ValidationResult::ok() const { return algebra.has_value(); }

InvalidAlgebra::InvalidAlgebra(std::vector<ViolationReport> violations)
    : std::invalid_argument([&] {
        std::ostringstream os;
        os << "not an effect algebra (" << violations.size() << " violation(s))";
        if (!violations.empty()) os << ": " << violations.front().message;
        return os.str();
      }()),
      violations_(std::move(violations)) {}

ValidationResult validate(const SumTable& table) {
  ValidationResult result;
  check_structure(table, result.violations);
  const bool structural_ok = result.violations.empty();
  check_associativity(table, result.violations);
  if (structural_ok) check_derived_table_rules(table, result.violations);
  if (result.violations.empty()) result.algebra.emplace(EffectAlgebra(table));
  return result;
}

EffectAlgebra EffectAlgebra::from_table(const SumTable& table) {
  auto result = validate(table);
  if (!result.ok()) throw InvalidAlgebra(std::move(result.violations));
  return std::move(*result.algebra);
}

EffectAlgebra::EffectAlgebra(SumTable table) : table_(std::move(table)) {
  const int n = table_.order();
  complement_.assign(static_cast<std::size_t>(n), kZero);
  complement_[kZero] = kOne;
  complement_[kOne] = kZero;
  for (ElementId a = 2; a < n; ++a)
    for (ElementId b = 2; b < n; ++b)
      if (table_.cell(a, b).is_one()) complement_[static_cast<std::size_t>(a)] = b;

  leq_.assign(static_cast<std::size_t>(n * n), 0);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId g = 0; g < n; ++g)
      if (auto b = table_.raw_sum(a, g)) leq_[static_cast<std::size_t>(a * n + *b)] = 1;
}

std::optional<ElementId> EffectAlgebra::ominus(ElementId b, ElementId a) const {
  for (ElementId g = 0; g < order(); ++g)
    if (sum(a, g) == b) return g;
  return std::nullopt;
}

EffectAlgebra::DefinedCount EffectAlgebra::count_defined() const {
  DefinedCount c{0, 0};
  for (ElementId a = 2; a < order(); ++a)
    for (ElementId b = 2; b < order(); ++b) (table_.cell(a, b).is_defined() ? c.defined : c.undefined)++;
  return c;
}

std::optional<ElementId> EffectAlgebra::multiple(ElementId e, int m) const {
  if (m <= 0) return kZero;
  std::optional<ElementId> x = e;
  for (int k = 2; k <= m && x; ++k) x = sum(*x, e);
  return x;
}

std::vector<ViolationReport> check_derived_laws(const EffectAlgebra& A) {
  std::vector<ViolationReport> out;
  const int n = A.order();
  const SumTable& t = A.table();
  auto fail = [&](ViolationKind k, std::vector<ElementId> w, std::string msg) {
    out.push_back({k, std::move(w), std::move(msg)});
  };

  // Complement: unique, involutive, 0 <-> 1.
  if (A.complement_of(kZero) != kOne || A.complement_of(kOne) != kZero)
    fail(ViolationKind::DerivedLaw, {kZero, kOne}, "complement does not swap 0 and 1");
  for (ElementId e = 0; e < n; ++e) {
    int hits = 0;
    for (ElementId f = 0; f < n; ++f) hits += A.sum(e, f) == kOne ? 1 : 0;
    if (hits != 1) fail(ViolationKind::DerivedLaw, {e}, name_of(t, e) + " has " + std::to_string(hits) + " complements");
    if (A.complement_of(A.complement_of(e)) != e)
      fail(ViolationKind::DerivedLaw, {e}, "complement is not an involution at " + name_of(t, e));
    // Unit absorbs nothing but zero.
    if (e != kZero && A.defined(e, kOne)) fail(ViolationKind::DerivedLaw, {e}, name_of(t, e) + " + 1 is defined");
  }

  for (ElementId e = 0; e < n; ++e) {
    // (a) e + 0 = e
    if (A.sum(e, kZero) != e) fail(ViolationKind::DerivedLaw, {e}, name_of(t, e) + " + 0 != " + name_of(t, e));
    for (ElementId f = 0; f < n; ++f) {
      const auto ef = A.sum(e, f);
      if (ef != A.sum(f, e)) fail(ViolationKind::DerivedLaw, {e, f}, "sum is not commutative");
      // (b) e + f = 0 implies e = f = 0
      if (ef == kZero && (e != kZero || f != kZero))
        fail(ViolationKind::DerivedLaw, {e, f}, "nonzero summands add up to 0");
      // (g) e + f = e implies f = 0
      if (ef == e && f != kZero) fail(ViolationKind::DerivedLaw, {e, f}, "e + f = e with f != 0");
      // (d) e + f defined iff e <= f'
      if (ef.has_value() != A.leq(e, A.complement_of(f)))
        fail(ViolationKind::DerivedLaw, {e, f}, "definedness of e + f disagrees with e <= f'");
      // (c) f <= e implies e - f = (e' + f)'
      if (A.leq(f, e)) {
        const auto diff = A.ominus(e, f);
        const auto via = A.sum(A.complement_of(e), f);
        if (!diff || !via || *diff != A.complement_of(*via))
          fail(ViolationKind::DerivedLaw, {e, f}, "e - f differs from (e' + f)'");
      }
      // (e) (e + f) - e = f
      if (ef && A.ominus(*ef, e) != f) fail(ViolationKind::DerivedLaw, {e, f}, "(e + f) - e != f");
      // (f) cancellation
      for (ElementId g = f + 1; g < n; ++g)
        if (ef && ef == A.sum(e, g))
          fail(ViolationKind::CancellationDerived, {e, f, g}, "cancellation fails");
    }
  }

  // Partial order with bottom 0 and top 1.
  for (ElementId a = 0; a < n; ++a) {
    if (!A.leq(a, a)) fail(ViolationKind::DerivedLaw, {a}, "order is not reflexive");
    if (!A.leq(kZero, a) || !A.leq(a, kOne)) fail(ViolationKind::DerivedLaw, {a}, "0 / 1 are not bottom / top");
    for (ElementId b = 0; b < n; ++b) {
      if (a != b && A.leq(a, b) && A.leq(b, a)) fail(ViolationKind::DerivedLaw, {a, b}, "order is not antisymmetric");
      for (ElementId c = 0; c < n; ++c)
        if (A.leq(a, b) && A.leq(b, c) && !A.leq(a, c))
          fail(ViolationKind::DerivedLaw, {a, b, c}, "order is not transitive");
    }
  }

  // Undefined-pair lemmas on nontrivial effects.
  int full_rows = 0;
  for (ElementId e = 2; e < n; ++e) {
    bool full = true;
    for (ElementId f = 2; f < n; ++f) {
      const bool ef = A.defined(e, f);
      full = full && ef;
      if (ef && e != A.complement_of(f) &&
          A.defined(A.complement_of(e), A.complement_of(f)))
        fail(ViolationKind::DerivedLaw, {e, f}, "e + f defined, e != f', but e' + f' is defined too");
      if (e != f && A.is_self_complementary(e) && A.is_self_complementary(f) && ef)
        fail(ViolationKind::RuleET5, {e, f}, "two self-complementary effects have a defined sum");
    }
    if (full) ++full_rows;
    if (A.defined(e, e) && !A.is_self_complementary(e) &&
        A.defined(A.complement_of(e), A.complement_of(e)))
      fail(ViolationKind::RuleET6, {e}, "e + e and e' + e' are both defined for non-self-complementary e");
    if (auto f = A.sum(e, e); f && *f >= 2 && A.defined(*f, *f) && !A.defined(e, *f))
      fail(ViolationKind::RuleET7, {e, *f}, "f = e + e with f + f defined but e + f undefined");
  }
  if (full_rows > 1)
    fail(ViolationKind::DerivedLaw, {}, std::to_string(full_rows) + " table rows have no undefined cell");

  return out;
}

}  // namespace effalg
