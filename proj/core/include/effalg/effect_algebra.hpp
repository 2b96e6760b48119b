#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "effalg/sum_table.hpp"

namespace effalg {

enum class ViolationKind {
  Symmetry,
  ComplementCount,
  ZeroInTable,
  SelfInRow,
  RuleET5,
  RuleET6,
  RuleET7,
  AssociativityDefinedness,
  AssociativityValue,
  CancellationDerived,
  DerivedLaw,
};

std::string to_string(ViolationKind kind);

struct ViolationReport {
  ViolationKind kind;
  std::vector<ElementId> witness;
  std::string message;
};

struct ValidationResult;

// Checks the structural sum-table rules (symmetry, one unit per row, no zero, no self
// reference), then associativity over every ordered triple of elements, trivial ones
// included, with "one side defined iff the other is". Every violation found is reported.
// Rules ET5-ET7 and cancellation are consequences of the axioms; they are reported as
// extra diagnostics but never decide validity on their own.
ValidationResult validate(const SumTable& table);

// A sum table that passed validate(). Immutable.
class EffectAlgebra {
 public:
  // Validates and throws InvalidAlgebra on failure.
  static EffectAlgebra from_table(const SumTable& table);

  int order() const { return table_.order(); }
  const SumTable& table() const { return table_; }

  // Total lookup: sum(x, 0) = x; sum(x, 1) undefined unless x = 0; else the table cell.
  std::optional<ElementId> sum(ElementId a, ElementId b) const { return table_.raw_sum(a, b); }
  bool defined(ElementId a, ElementId b) const { return sum(a, b).has_value(); }

  ElementId complement_of(ElementId e) const { return complement_[static_cast<std::size_t>(e)]; }
  bool leq(ElementId a, ElementId b) const {
    return leq_[static_cast<std::size_t>(a * order() + b)] != 0;
  }
  // The unique g with a + g = b, if b >= a.
  std::optional<ElementId> ominus(ElementId b, ElementId a) const;

  bool is_self_complementary(ElementId e) const { return complement_of(e) == e; }

  struct DefinedCount {
    int defined;
    int undefined;
  };
  // Over the (n-2)^2 ordered nontrivial pairs.
  DefinedCount count_defined() const;

  // m-fold sum e + e + ... + e (m >= 1), if defined. 0*e is the zero effect.
  std::optional<ElementId> multiple(ElementId e, int m) const;

 private:
  friend ValidationResult validate(const SumTable& table);
  explicit EffectAlgebra(SumTable table);

  SumTable table_;
  std::vector<ElementId> complement_;
  std::vector<unsigned char> leq_;
};

struct ValidationResult {
  std::optional<EffectAlgebra> algebra;
  std::vector<ViolationReport> violations;

  bool ok() const;
};

// Thrown by EffectAlgebra::from_table when the table is not an effect algebra.
class InvalidAlgebra : public std::invalid_argument {
 public:
  explicit InvalidAlgebra(std::vector<ViolationReport> violations);
  const std::vector<ViolationReport>& violations() const { return violations_; }

 private:
  std::vector<ViolationReport> violations_;
};

// Re-checks the elementary laws (zero identity, positivity, cancellation, e - f formula,
// definedness vs. order, partial order properties) and the undefined-pair lemmas on a
// validated algebra. These are theorems, so a nonempty result means a bug somewhere.
std::vector<ViolationReport> check_derived_laws(const EffectAlgebra& algebra);

}  // namespace effalg
