#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "effalg/models.hpp"
#include "effalg/sum_table.hpp"

namespace effalg {

// Bad input document. line and column are 1-based; both are 0 when the position is not
// known (semantic errors in JSON documents, which name the offending member instead).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Text document, one statement per line or separated by ';', '#' starts a comment:
//
//   n = 5
//   labels: e f g        (optional; defaults to e f g ...)
//   e: f g I
//   f: g I -
//   g: I - -
//
// Rows come in label order. Cell tokens: "-" or "⋄" undefined, "I" or "𝟙" the unit, "0"
// the zero effect (never valid, but kept so validate() can report it), otherwise a label.
SumTable parse_text_table(std::string_view text);

// {"n": 5, "labels": ["e", "f", "g"], "cells": [["f", "g", "I"], ...]}; labels optional.
SumTable parse_json_table(std::string_view text);

// JSON when the first non-blank character is '{', text otherwise.
SumTable parse_table(std::string_view text);

enum class Format { Ascii, Latex, Json };
std::optional<Format> parse_format(std::string_view name);

struct RenderOptions {
  bool latex_standalone = false;  // wrap the tabular in a compilable document
};

// Ascii output is the text document format, column-aligned; parsing it gives back the
// table. Labels that cannot be written as tokens are replaced by the defaults.
std::string render(const SumTable& table, Format format, const RenderOptions& options = {});

// Macro definitions used by the LaTeX renderer (\eaundef, \eaone).
std::string latex_macros();

enum class ModelKind { Multiplicative, Fuzzy, Quantum };

struct ModelDocument {
  ModelKind kind;
  std::variant<MultiplicativeModel, FuzzyAssignment, std::vector<ComplexMatrix>> model;
};

// {"kind": "multiplicative" | "fuzzy" | "quantum", "assignment": {label: value}}.
// Keys are the table's labels, with "0" for the zero effect and "I" (or "1") for the unit.
// Multiplicative values are a scalar or an array of scalars; a scalar is an integer, a
// "p/q" string or {"re": r, "im": i, "omega": k} meaning (r + i*i) * w^k. Fuzzy values are
// a rational or an array of rationals. Quantum values are row-major matrices whose entries
// are numbers, "p/q" strings or {"re": x, "im": y}. Omitted trivial elements default to
// 1 (multiplicative zero effect), zeros and ones (fuzzy), the zero and identity matrix
// (quantum).
ModelDocument parse_model(std::string_view text, const SumTable& table);

}  // namespace effalg
