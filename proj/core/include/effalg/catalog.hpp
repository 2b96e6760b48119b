#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "effalg/effect_algebra.hpp"
#include "effalg/rational.hpp"

namespace effalg {

// S_n = {0, 1/(n-1), ..., 1}; element k/(n-1) has id k + 1. Throws std::invalid_argument
// for n < 2.
EffectAlgebra make_scale(int n);

// k self-complementary effects followed by l complement pairs, no other defined sums.
// Order 2 + k + 2l. D_n = make_sparse(n - 2, 0), P_n = make_sparse(0, (n - 2) / 2).
// Throws std::invalid_argument for negative arguments or k + 2l < 1.
EffectAlgebra make_sparse(int k, int l);

// Properties recorded for a named algebra.
struct ExpectedSummary {
  bool quantum = false;
  bool scale = false;
  bool composite = false;
  int defined_count = 0;
  std::optional<std::pair<int, int>> sparse_params;
  int state_dimension = -1;                        // -1: no states
  std::optional<int> vertex_count;
  std::optional<RationalVector> unique_state;      // values on the nontrivial effects, in table order
  std::optional<bool> separating;
  std::optional<bool> order_determining;
  std::optional<int> min_fuzzy_dimension;
};

struct CatalogEntry {
  std::string name;
  std::vector<std::string> aliases;
  EffectAlgebra algebra;
  std::string description;
  ExpectedSummary expected;
};

// Every named algebra: the 19 algebras with 2 to 6 elements, E8 and the stateless
// nine-element algebra R9.
const std::vector<CatalogEntry>& catalog();

// By name or alias.
const CatalogEntry* find_entry(std::string_view name);

// The entry isomorphic to `table`, if any.
const CatalogEntry* lookup(const SumTable& table);

}  // namespace effalg
