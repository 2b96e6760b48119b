#include "effalg/sum_table.hpp"

#include <string>

namespace effalg {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  labels.emplace_back("0");
  if (n > 1) labels.emplace_back("I");
  for (int i = 2; i < n; ++i) {
    int letter = 'e' + (i - 2);
    if (letter <= 'z')
      labels.emplace_back(1, static_cast<char>(letter));
    else
      labels.push_back("e" + std::to_string(i));
  }
  return labels;
}

SumTable::SumTable(int n) : n_(n) {
  if (n < 2) throw StructuralError("a sum table needs at least 2 elements, got " + std::to_string(n));
  if (n > 250) throw StructuralError("order " + std::to_string(n) + " is beyond the supported range");
  cells_.assign(static_cast<std::size_t>(n - 2) * static_cast<std::size_t>(n - 2), CellValue::undefined());
  labels_ = default_labels(n);
}

SumTable::SumTable(int n, const std::vector<std::vector<CellValue>>& rows) : SumTable(n) {
  if (rows.size() != static_cast<std::size_t>(n - 2))
    throw StructuralError("expected " + std::to_string(n - 2) + " rows, got " + std::to_string(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw StructuralError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                            " cells, expected " + std::to_string(rows.size()));
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      set(static_cast<ElementId>(i + 2), static_cast<ElementId>(j + 2), rows[i][j]);
  }
}

void SumTable::check_element(ElementId e, const char* what) const {
  if (e < 2 || e >= n_)
    throw StructuralError(std::string(what) + " " + std::to_string(e) + " is not a nontrivial element of a " +
                          std::to_string(n_) + "-element table");
}

void SumTable::set(ElementId a, ElementId b, CellValue v) {
  check_element(a, "row");
  check_element(b, "column");
  if (v.is_effect() && v.code() >= n_)
    throw StructuralError("cell payload " + std::to_string(v.code()) + " is dangling in a " + std::to_string(n_) +
                          "-element table");
  cells_[index(a, b)] = v;
}

void SumTable::set_symmetric(ElementId a, ElementId b, CellValue v) {
  set(a, b, v);
  set(b, a, v);
}

std::optional<ElementId> SumTable::raw_sum(ElementId a, ElementId b) const {
  if (a == kZero) return b;
  if (b == kZero) return a;
  if (a == kOne || b == kOne) return std::nullopt;
  return cell(a, b).element();
}

void SumTable::set_labels(std::vector<std::string> labels) {
  if (labels.size() != static_cast<std::size_t>(n_))
    throw StructuralError("expected " + std::to_string(n_) + " labels, got " + std::to_string(labels.size()));
  labels_ = std::move(labels);
}

std::vector<CellValue> SumTable::flattened_upper() const {
  std::vector<CellValue> out;
  out.reserve(static_cast<std::size_t>((n_ - 2) * (n_ - 1) / 2));
  for (ElementId a = 2; a < n_; ++a)
    for (ElementId b = a; b < n_; ++b) out.push_back(cell(a, b));
  return out;
}

std::strong_ordering operator<=>(const SumTable& a, const SumTable& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (ElementId i = 2; i < a.n_; ++i)
    for (ElementId j = i; j < a.n_; ++j)
      if (auto c = a.cell(i, j) <=> b.cell(i, j); c != 0) return c;
  // Equal upper triangles; fall back to the lower one so that the order is total.
  for (ElementId i = 2; i < a.n_; ++i)
    for (ElementId j = 2; j < i; ++j)
      if (auto c = a.cell(i, j) <=> b.cell(i, j); c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace effalg
