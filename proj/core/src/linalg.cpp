#include "effalg/linalg.hpp"

#include <stdexcept>

namespace effalg {

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::optional<AffineSolution> solve_affine(const RationalMatrix& a, const RationalVector& b, std::size_t cols) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_affine: row count mismatch");
  RationalMatrix aug;
  aug.reserve(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != cols) throw std::invalid_argument("solve_affine: ragged matrix");
    RationalVector row = a[r];
    row.push_back(b[r]);
    aug.push_back(std::move(row));
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(cols, Rational(0));
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    sol.particular[pivots[r]] = aug[r][cols];
  }
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug[r][free];
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

std::optional<RationalVector> solve_unique(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t n = a.size();
  auto sol = solve_affine(a, b, n);
  if (!sol || !sol->kernel.empty()) return std::nullopt;
  return std::move(sol->particular);
}

std::size_t rank(RationalMatrix rows) { return row_reduce(rows).size(); }

}  // namespace effalg
