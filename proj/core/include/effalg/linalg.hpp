#pragma once

#include <optional>
#include <vector>

#include "effalg/rational.hpp"

namespace effalg {

using RationalMatrix = std::vector<RationalVector>;  // row-major

// Solution set {particular + sum t_k kernel[k]} of a x = b.
struct AffineSolution {
  RationalVector particular;
  std::vector<RationalVector> kernel;  // basis of the null space, one vector per free column
};

// Reduces m in place to reduced row echelon form and returns the pivot column of each
// nonzero row.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

// Exact solution of a x = b with `cols` unknowns; nullopt if inconsistent.
std::optional<AffineSolution> solve_affine(const RationalMatrix& a, const RationalVector& b, std::size_t cols);

// Unique solution of a square system, nullopt if singular.
std::optional<RationalVector> solve_unique(const RationalMatrix& a, const RationalVector& b);

std::size_t rank(RationalMatrix rows);

}  // namespace effalg
