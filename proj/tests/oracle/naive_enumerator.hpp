#pragma once

#include <cstddef>
#include <set>
#include <vector>

namespace oracle {

// Full n x n sum table over elements 0..n-1 (0 zero, 1 unit). -1 marks an undefined sum.
using Table = std::vector<std::vector<int>>;

// Key of a table under relabeling: the smallest nontrivial upper triangle over all
// permutations of 2..n-1, cells read as -1 < 1 < 2 < ...
using Key = std::vector<int>;

Key canonical_key(const Table& t);

struct NaiveResult {
  std::size_t labeled = 0;  // tables before removing isomorphic copies
  std::set<Key> classes;
};

// Brute force over symmetric fillings with one unit per row and no element in its own row
// or column, cut only by associativity on fully known triples. Isomorphic copies are
// removed afterwards.
NaiveResult naive_enumerate(int n);

// Every axiom checked over the full table.
bool is_effect_algebra(const Table& t);

}  // namespace oracle
