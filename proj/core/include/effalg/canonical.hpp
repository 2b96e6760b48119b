#pragma once

#include <vector>

#include "effalg/sum_table.hpp"

namespace effalg {

// Relabeling of an n-element carrier: perm[old] = new. Must fix 0 and 1 and permute 2..n-1.
using Permutation = std::vector<ElementId>;

Permutation identity_permutation(int n);
Permutation inverse(const Permutation& perm);

// Relabels rows, columns and Effect payloads consistently; labels travel with their
// elements. Throws std::invalid_argument if perm is not a bijection fixing 0 and 1.
SumTable apply_permutation(const SumTable& table, const Permutation& perm);

struct CanonicalForm {
  SumTable table;
  Permutation permutation;  // apply_permutation(input, permutation) == table
};

// Minimises the row-major upper triangle over all (n-2)! relabelings of the nontrivial
// elements, comparing cells as Undefined < One < Effect(2) < Effect(3) < ... with payloads
// read after relabeling. Ties go to the lexicographically least permutation. The
// canonical table carries default labels.
CanonicalForm canonical_form(const SumTable& table);

bool are_isomorphic(const SumTable& a, const SumTable& b);

}  // namespace effalg
