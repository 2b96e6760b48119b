#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace effalg {

// Elements are positional: 0 is the zero effect, 1 the unit, 2..n-1 the nontrivial effects.
using ElementId = int;
inline constexpr ElementId kZero = 0;
inline constexpr ElementId kOne = 1;

// One sum-table cell. The internal code doubles as the total order used for canonical
// forms: Undefined (0) < One (1) < Effect(2) < Effect(3) < ...
class CellValue {
 public:
  constexpr CellValue() = default;

  static constexpr CellValue undefined() { return CellValue(kUndefinedCode); }
  static constexpr CellValue one() { return CellValue(kOneCode); }
  static constexpr CellValue effect(ElementId e) { return CellValue(static_cast<std::uint8_t>(e)); }
  // A reference to the zero effect. Never valid inside a sum table; it exists so that
  // parsed input can carry the mistake through to validate().
  static constexpr CellValue zero_ref() { return CellValue(kZeroCode); }

  constexpr bool is_undefined() const { return code_ == kUndefinedCode; }
  constexpr bool is_one() const { return code_ == kOneCode; }
  constexpr bool is_zero_ref() const { return code_ == kZeroCode; }
  constexpr bool is_effect() const { return code_ >= 2 && code_ != kZeroCode; }
  constexpr bool is_defined() const { return !is_undefined(); }

  // Element the cell evaluates to, if defined.
  constexpr std::optional<ElementId> element() const {
    if (is_undefined()) return std::nullopt;
    if (is_zero_ref()) return kZero;
    return static_cast<ElementId>(code_);
  }

  constexpr std::uint8_t code() const { return code_; }

  friend constexpr bool operator==(CellValue, CellValue) = default;
  friend constexpr auto operator<=>(CellValue a, CellValue b) { return a.code_ <=> b.code_; }

 private:
  static constexpr std::uint8_t kUndefinedCode = 0;
  static constexpr std::uint8_t kOneCode = 1;
  static constexpr std::uint8_t kZeroCode = 255;

  constexpr explicit CellValue(std::uint8_t code) : code_(code) {}

  std::uint8_t code_ = kUndefinedCode;
};

// Grid dimensions or a cell payload that cannot belong to a table of the stated order.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Partial sum table on the nontrivial elements of an n-element carrier. Trivial rows
// (x + 0 = x, x + 1 defined only for x = 0) are implicit.
//
// Cells are stored as the full (n-2)x(n-2) grid so that asymmetric input survives until
// validate() can report it. Labels are display metadata and do not take part in equality.
class SumTable {
 public:
  SumTable() : SumTable(2) {}
  explicit SumTable(int n);

  // rows[i][j] is the cell for elements (i + 2, j + 2). Throws StructuralError on ragged
  // rows, wrong dimensions, or payloads outside [0, n).
  SumTable(int n, const std::vector<std::vector<CellValue>>& rows);

  int order() const { return n_; }
  int nontrivial_count() const { return n_ - 2; }

  // Both arguments must be nontrivial (>= 2).
  CellValue cell(ElementId a, ElementId b) const { return cells_[index(a, b)]; }
  void set(ElementId a, ElementId b, CellValue v);
  void set_symmetric(ElementId a, ElementId b, CellValue v);

  // Total lookup including the implicit trivial rows, read straight off the grid
  // (no validation is implied).
  std::optional<ElementId> raw_sum(ElementId a, ElementId b) const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(ElementId e) const { return labels_.at(static_cast<std::size_t>(e)); }
  void set_labels(std::vector<std::string> labels);

  // Upper triangle (a <= b) in row-major order; the sequence canonical forms minimise.
  std::vector<CellValue> flattened_upper() const;

  friend bool operator==(const SumTable& a, const SumTable& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }
  // Lexicographic on (n, flattened upper triangle).
  friend std::strong_ordering operator<=>(const SumTable& a, const SumTable& b);

 private:
  std::size_t index(ElementId a, ElementId b) const {
    return static_cast<std::size_t>(a - 2) * static_cast<std::size_t>(n_ - 2) +
           static_cast<std::size_t>(b - 2);
  }
  void check_element(ElementId e, const char* what) const;

  int n_;
  std::vector<CellValue> cells_;
  std::vector<std::string> labels_;
};

// "0", "I", then e, f, g, ... (continuing with e10, e11, ... past z).
std::vector<std::string> default_labels(int n);

}  // namespace effalg
