#pragma once

#include <cstdint>
#include <vector>

#include "effalg/effect_algebra.hpp"

namespace effalg {

struct EnumerationStats {
  std::uint64_t nodes = 0;                 // cell assignments tried
  std::uint64_t pruned_unit = 0;           // more or fewer than one unit in a row
  std::uint64_t pruned_self = 0;           // a summand reappearing in its own row/column
  std::uint64_t pruned_et5 = 0;            // two self-complementary effects with a defined sum
  std::uint64_t pruned_et6 = 0;            // e + e and e' + e' both defined
  std::uint64_t pruned_et7 = 0;            // f = e + e, f + f defined, e + f undefined
  std::uint64_t pruned_full_row = 0;       // a second row without undefined cells
  std::uint64_t pruned_associativity = 0;  // a fully determined triple breaks associativity
  std::uint64_t pruned_noncanonical = 0;   // a relabeling gives a smaller prefix
  std::uint64_t rejected_by_validate = 0;  // complete tables refused by validate()
  std::uint64_t raw_tables = 0;            // complete valid tables before isomorphism filtering

  EnumerationStats& operator+=(const EnumerationStats& o);
};

struct EnumerationOptions {
  bool count_only = false;
  unsigned jobs = 1;
  // false: keep every valid labeling and deduplicate afterwards by canonical form.
  bool orderly = true;
};

struct EnumerationResult {
  int n = 0;
  std::size_t count = 0;
  std::vector<EffectAlgebra> algebras;  // canonical labeling, ascending table order; empty if count_only
  EnumerationStats stats;
};

// All effect algebras with n elements up to isomorphism. Cells of the upper triangle are
// filled row by row; partial tables are cut by the unit-per-row rule, rules ET4-ET7, the
// single-full-row bound, associativity of already determined triples and, in orderly
// mode, by any relabeling that yields a smaller prefix. Complete tables go through
// validate(). The output does not depend on jobs. Throws std::invalid_argument for n < 2.
EnumerationResult enumerate(int n, const EnumerationOptions& options = {});

}  // namespace effalg
