#pragma once

#include <optional>
#include <string>
#include <utility>

#include "effalg/effect_algebra.hpp"

namespace effalg {

// m*e = m*f, both defined, for distinct nontrivial e and f. Rules out weak quantum (and so
// quantum) representability.
struct NotQuantumWitness {
  ElementId e;
  ElementId f;
  int multiplicity;
  friend bool operator==(const NotQuantumWitness&, const NotQuantumWitness&) = default;
};

struct Classification {
  int n = 0;
  int defined_count = 0;
  bool is_totally_ordered = false;
  bool is_scale = false;
  std::optional<ElementId> scale_generator;
  // Complementary e, f with e + e and f + f both undefined: a quick proof of "not scale".
  bool not_scale_precheck = false;
  bool is_sparse = false;
  std::optional<std::pair<int, int>> sparse_params;  // (self-complementary count, complement pairs)
  std::optional<std::string> family_name;
  std::optional<NotQuantumWitness> not_quantum_witness;
  std::optional<bool> is_composite;  // left empty by classify()
  int self_complementary_count = 0;
};

// Scale is decided three ways (total order, single generator, a row without undefined
// cells); std::logic_error if they disagree. The family name comes from the catalog, else
// from the scale/sparse shape (S7, D8, P8, E8(2,3), ...).
Classification classify(const EffectAlgebra& algebra);

// First (e, f, m) with e < f nontrivial, 2 <= m <= 2n, in that loop order.
std::optional<NotQuantumWitness> not_quantum_witness(const EffectAlgebra& algebra);

// Number of sparse algebras of order n: n/2 for even n, (n-1)/2 for odd n, 1 for n = 2.
int sparse_count(int n);
// Bounds on the number of defined nontrivial ordered pairs.
int max_defined(int n);
int min_defined(int n);

}  // namespace effalg
