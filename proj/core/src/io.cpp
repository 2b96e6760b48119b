#include "effalg/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace effalg {

using nlohmann::json;

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? std::to_string(line) + ":" + std::to_string(column) + ": " + message : message),
      line_(line),
      column_(column) {}

namespace {

constexpr std::string_view kUndefTokens[] = {"-", "⋄"};
constexpr std::string_view kOneTokens[] = {"I", "𝟙"};
constexpr std::string_view kReserved[] = {"-", "⋄", "I", "𝟙", "0", "1", "labels"};

bool is_undef_token(std::string_view t) { return t == kUndefTokens[0] || t == kUndefTokens[1]; }
bool is_one_token(std::string_view t) { return t == kOneTokens[0] || t == kOneTokens[1]; }

bool usable_label(std::string_view s) {
  if (s.empty()) return false;
  if (std::find(std::begin(kReserved), std::end(kReserved), s) != std::end(kReserved)) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ':' || c == ';' || c == '#' || c == '=' || c == '"';
  });
}

struct Token {
  std::string text;
  int line;
  int column;
};

// Splits a text document into statements of tokens. ':' and '=' are tokens of their own.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> statements(1);
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto flush = [&] {
    if (!statements.back().empty()) statements.emplace_back();
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      flush();
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (c == ';') {
      flush();
      ++column;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++column;
      ++i;
      continue;
    }
    if (c == ':' || c == '=') {
      statements.back().push_back({std::string(1, c), line, column});
      ++column;
      ++i;
      continue;
    }
    Token tok{"", line, column};
    while (i < text.size()) {
      const char d = text[i];
      if (std::isspace(static_cast<unsigned char>(d)) || d == ':' || d == '=' || d == ';' || d == '#') break;
      tok.text.push_back(d);
      // Count code points, not bytes.
      if ((static_cast<unsigned char>(d) & 0xC0) != 0x80) ++column;
      ++i;
    }
    statements.back().push_back(std::move(tok));
  }
  if (statements.back().empty()) statements.pop_back();
  return statements;
}

[[noreturn]] void fail(const Token& at, const std::string& message) { throw ParseError(message, at.line, at.column); }

int parse_order(const std::vector<Token>& st) {
  if (st.size() != 3) fail(st.front(), "expected 'n = <order>'");
  const std::string& v = st[2].text;
  if (v.empty() || v.size() > 4 || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    fail(st[2], "order must be an integer, got '" + v + "'");
  const int n = std::stoi(v);
  if (n < 2 || n > 250) fail(st[2], "order must be between 2 and 250, got " + v);
  return n;
}

CellValue cell_from_token(const std::string& tok, const std::map<std::string, ElementId>& index, bool& ok) {
  ok = true;
  if (is_undef_token(tok)) return CellValue::undefined();
  if (is_one_token(tok)) return CellValue::one();
  if (tok == "0") return CellValue::zero_ref();
  const auto it = index.find(tok);
  if (it == index.end()) {
    ok = false;
    return CellValue::undefined();
  }
  return CellValue::effect(it->second);
}

}  // namespace

SumTable parse_text_table(std::string_view text) {
  const auto statements = tokenize(text);
  if (statements.empty()) throw ParseError("empty document", 1, 1);

  const auto& first = statements.front();
  if (first.size() < 2 || first[0].text != "n" || first[1].text != "=")
    fail(first.front(), "document must start with 'n = <order>'");
  const int n = parse_order(first);
  const int m = n - 2;

  std::size_t next = 1;
  std::vector<std::string> labels = default_labels(n);
  if (next < statements.size() && statements[next][0].text == "labels") {
    const auto& st = statements[next];
    if (st.size() < 2 || st[1].text != ":") fail(st[0], "expected ':' after 'labels'");
    if (static_cast<int>(st.size()) - 2 != m)
      fail(st[0], "expected " + std::to_string(m) + " labels, got " + std::to_string(st.size() - 2));
    std::set<std::string> seen;
    for (std::size_t k = 2; k < st.size(); ++k) {
      if (!usable_label(st[k].text)) fail(st[k], "'" + st[k].text + "' cannot be used as a label");
      if (!seen.insert(st[k].text).second) fail(st[k], "duplicate label '" + st[k].text + "'");
      labels[k] = st[k].text;
    }
    ++next;
  }
  std::map<std::string, ElementId> index;
  for (ElementId e = 2; e < n; ++e) index[labels[static_cast<std::size_t>(e)]] = e;

  SumTable table(n);
  table.set_labels(labels);
  int row = 0;
  for (; next < statements.size(); ++next, ++row) {
    const auto& st = statements[next];
    if (row >= m) fail(st[0], "too many rows; the table has " + std::to_string(m));
    const std::string& want = labels[static_cast<std::size_t>(row + 2)];
    if (st.size() < 2 || st[1].text != ":") fail(st[0], "expected '<label>:' at the start of a row");
    if (st[0].text != want) fail(st[0], "expected the row for '" + want + "', got '" + st[0].text + "'");
    if (static_cast<int>(st.size()) - 2 != m)
      fail(st[0], "row '" + want + "' has " + std::to_string(st.size() - 2) + " cells, expected " + std::to_string(m));
    for (int col = 0; col < m; ++col) {
      const Token& tok = st[static_cast<std::size_t>(col + 2)];
      bool ok = false;
      const CellValue v = cell_from_token(tok.text, index, ok);
      if (!ok) fail(tok, "unknown token '" + tok.text + "'");
      table.set(row + 2, col + 2, v);
    }
  }
  if (row < m) {
    const Token& last = statements.back().back();
    throw ParseError("expected " + std::to_string(m) + " rows, got " + std::to_string(row), last.line, last.column);
  }
  return table;
}

namespace {

// Line and column of a byte offset.
std::pair<int, int> position_of(std::string_view text, std::size_t offset) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      ++column;
    }
  }
  return {line, column};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string msg = e.what();
    if (const auto p = msg.find("parse error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError("invalid JSON: " + msg, line, column);
  }
}

[[noreturn]] void fail_json(const std::string& where, const std::string& message) {
  throw ParseError(where + ": " + message, 0, 0);
}

}  // namespace

SumTable parse_json_table(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail_json("document", "expected an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) fail_json("n", "missing or not an integer");
  const int n = doc["n"].get<int>();
  if (n < 2 || n > 250) fail_json("n", "order must be between 2 and 250");
  const int m = n - 2;

  std::vector<std::string> labels = default_labels(n);
  if (doc.contains("labels")) {
    const json& l = doc["labels"];
    if (!l.is_array() || static_cast<int>(l.size()) != m)
      fail_json("labels", "expected an array of " + std::to_string(m) + " strings");
    std::set<std::string> seen;
    for (int k = 0; k < m; ++k) {
      const std::string where = "labels[" + std::to_string(k) + "]";
      if (!l[static_cast<std::size_t>(k)].is_string()) fail_json(where, "not a string");
      const auto s = l[static_cast<std::size_t>(k)].get<std::string>();
      if (!usable_label(s)) fail_json(where, "'" + s + "' cannot be used as a label");
      if (!seen.insert(s).second) fail_json(where, "duplicate label '" + s + "'");
      labels[static_cast<std::size_t>(k + 2)] = s;
    }
  }
  std::map<std::string, ElementId> index;
  for (ElementId e = 2; e < n; ++e) index[labels[static_cast<std::size_t>(e)]] = e;

  const json cells = doc.contains("cells") ? doc["cells"] : json::array();
  if (!cells.is_array() || static_cast<int>(cells.size()) != m)
    fail_json("cells", "expected " + std::to_string(m) + " rows");
  SumTable table(n);
  table.set_labels(labels);
  for (int r = 0; r < m; ++r) {
    const json& row = cells[static_cast<std::size_t>(r)];
    const std::string where = "cells[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      fail_json(where, "expected " + std::to_string(m) + " cells");
    for (int c = 0; c < m; ++c) {
      const json& tok = row[static_cast<std::size_t>(c)];
      const std::string cw = where + "[" + std::to_string(c) + "]";
      if (!tok.is_string()) fail_json(cw, "cell tokens are strings");
      bool ok = false;
      const CellValue v = cell_from_token(tok.get<std::string>(), index, ok);
      if (!ok) fail_json(cw, "unknown token '" + tok.get<std::string>() + "'");
      table.set(r + 2, c + 2, v);
    }
  }
  return table;
}

SumTable parse_table(std::string_view text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string_view::npos && text[p] == '{') return parse_json_table(text);
  return parse_text_table(text);
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "ascii" || name == "text") return Format::Ascii;
  if (name == "latex" || name == "tex") return Format::Latex;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

namespace {

std::vector<std::string> writable_labels(const SumTable& table) {
  const int n = table.order();
  std::set<std::string> seen;
  for (ElementId e = 2; e < n; ++e)
    if (!usable_label(table.label(e)) || !seen.insert(table.label(e)).second) return default_labels(n);
  return table.labels();
}

std::string token_of(CellValue v, const std::vector<std::string>& labels) {
  if (v.is_undefined()) return "-";
  if (v.is_one()) return "I";
  if (v.is_zero_ref()) return "0";
  return labels[v.code()];
}

std::string render_ascii(const SumTable& table) {
  const int n = table.order();
  const auto labels = writable_labels(table);
  std::size_t width = 1;
  for (ElementId e = 2; e < n; ++e) width = std::max(width, labels[static_cast<std::size_t>(e)].size());
  auto pad = [width](const std::string& s) { return s + std::string(width - std::min(width, s.size()), ' '); };

  std::ostringstream os;
  os << "# effect algebra sum table, " << n << " elements\n";
  os << "n = " << n << "\n";
  if (n > 2) {
    os << "labels:";
    for (ElementId e = 2; e < n; ++e) os << ' ' << labels[static_cast<std::size_t>(e)];
    os << "\n";
  }
  for (ElementId a = 2; a < n; ++a) {
    std::string line = pad(labels[static_cast<std::size_t>(a)]) + ":";
    for (ElementId b = 2; b < n; ++b) line += " " + pad(token_of(table.cell(a, b), labels));
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '_': case '#': case '$': case '%': case '&': case '{': case '}':
        out += '\\';
        out += c;
        break;
      case '\\':
        out += "\\backslash ";
        break;
      case '^':
        out += "\\hat{}";
        break;
      case '~':
        out += "\\sim ";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string render_latex(const SumTable& table, bool standalone) {
  const int n = table.order();
  const auto labels = writable_labels(table);
  std::ostringstream os;
  if (standalone) os << "\\documentclass{standalone}\n\\usepackage{amsmath,amssymb}\n";
  os << latex_macros();
  if (standalone) os << "\\begin{document}\n";
  os << "\\begin{tabular}{c|" << std::string(static_cast<std::size_t>(n - 2), 'c') << "}\n";
  os << "$\\oplus$";
  for (ElementId e = 2; e < n; ++e) os << " & $" << latex_escape(labels[static_cast<std::size_t>(e)]) << "$";
  os << " \\\\\n\\hline\n";
  for (ElementId a = 2; a < n; ++a) {
    os << "$" << latex_escape(labels[static_cast<std::size_t>(a)]) << "$";
    for (ElementId b = 2; b < n; ++b) {
      const CellValue v = table.cell(a, b);
      os << " & $";
      if (v.is_undefined()) os << "\\eaundef";
      else if (v.is_one()) os << "\\eaone";
      else if (v.is_zero_ref()) os << "0";
      else os << latex_escape(labels[v.code()]);
      os << "$";
    }
    os << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  if (standalone) os << "\\end{document}\n";
  return os.str();
}

std::string render_json(const SumTable& table) {
  const int n = table.order();
  const auto labels = writable_labels(table);
  json doc;
  doc["n"] = n;
  doc["labels"] = json::array();
  for (ElementId e = 2; e < n; ++e) doc["labels"].push_back(labels[static_cast<std::size_t>(e)]);
  doc["cells"] = json::array();
  for (ElementId a = 2; a < n; ++a) {
    json row = json::array();
    for (ElementId b = 2; b < n; ++b) row.push_back(token_of(table.cell(a, b), labels));
    doc["cells"].push_back(std::move(row));
  }
  return doc.dump() + "\n";
}

}  // namespace

std::string latex_macros() {
  return "\\providecommand{\\eaundef}{\\diamond}\n\\providecommand{\\eaone}{\\mathbf{1}}\n";
}

std::string render(const SumTable& table, Format format, const RenderOptions& options) {
  switch (format) {
    case Format::Ascii:
      return render_ascii(table);
    case Format::Latex:
      return render_latex(table, options.latex_standalone);
    case Format::Json:
      return render_json(table);
  }
  return {};
}

namespace {

Rational rational_from_json(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
      fail_json(where, e.what());
    }
  }
  fail_json(where, "expected an integer or a \"p/q\" string");
}

Cyclotomic cyclotomic_from_json(const json& v, const std::string& where) {
  if (!v.is_object()) return Cyclotomic(rational_from_json(v, where));
  for (const auto& [key, _] : v.items())
    if (key != "re" && key != "im" && key != "omega") fail_json(where, "unknown member '" + key + "'");
  const Rational re = v.contains("re") ? rational_from_json(v["re"], where + ".re") : Rational(0);
  const Rational im = v.contains("im") ? rational_from_json(v["im"], where + ".im") : Rational(0);
  int k = 0;
  if (v.contains("omega")) {
    if (!v["omega"].is_number_integer()) fail_json(where + ".omega", "expected an integer exponent");
    k = v["omega"].get<int>();
  }
  return Cyclotomic::from_triple(re, im, k);
}

double real_from_json(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  return rational_from_json(v, where).get_d();
}

std::complex<double> complex_from_json(const json& v, const std::string& where) {
  if (!v.is_object()) return {real_from_json(v, where), 0.0};
  const double re = v.contains("re") ? real_from_json(v["re"], where + ".re") : 0.0;
  const double im = v.contains("im") ? real_from_json(v["im"], where + ".im") : 0.0;
  return {re, im};
}

}  // namespace

ModelDocument parse_model(std::string_view text, const SumTable& table) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail_json("document", "expected an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) fail_json("kind", "missing or not a string");
  const std::string kind = doc["kind"].get<std::string>();
  if (!doc.contains("assignment") || !doc["assignment"].is_object())
    fail_json("assignment", "missing or not an object");

  const int n = table.order();
  std::map<std::string, ElementId> index{{"0", kZero}, {"I", kOne}, {"1", kOne}, {"𝟙", kOne}};
  for (ElementId e = 2; e < n; ++e) index[table.label(e)] = e;
  std::vector<const json*> values(static_cast<std::size_t>(n), nullptr);
  for (const auto& [key, value] : doc["assignment"].items()) {
    const auto it = index.find(key);
    if (it == index.end()) fail_json("assignment", "unknown element '" + key + "'");
    if (values[static_cast<std::size_t>(it->second)]) fail_json("assignment", "element '" + key + "' given twice");
    values[static_cast<std::size_t>(it->second)] = &value;
  }
  for (ElementId e = 2; e < n; ++e)
    if (!values[static_cast<std::size_t>(e)]) fail_json("assignment", "no value for '" + table.label(e) + "'");
  auto where = [&](ElementId e) { return "assignment." + (e == kZero ? std::string("0") : e == kOne ? "I" : table.label(e)); };

  if (kind == "multiplicative") {
    if (!values[kOne]) fail_json("assignment", "no value for the unit 'I'");
    MultiplicativeModel model;
    model.assignment.resize(static_cast<std::size_t>(n));
    std::size_t dim = 0;
    for (ElementId e = 0; e < n; ++e) {
      const json* v = values[static_cast<std::size_t>(e)];
      if (!v) continue;
      auto& out = model.assignment[static_cast<std::size_t>(e)];
      if (v->is_array()) {
        for (std::size_t k = 0; k < v->size(); ++k)
          out.push_back(cyclotomic_from_json((*v)[k], where(e) + "[" + std::to_string(k) + "]"));
      } else {
        out.push_back(cyclotomic_from_json(*v, where(e)));
      }
      dim = out.size();
    }
    if (!values[kZero]) model.assignment[kZero].assign(dim, Cyclotomic(1));
    return {ModelKind::Multiplicative, std::move(model)};
  }

  if (kind == "fuzzy") {
    FuzzyAssignment fa;
    fa.assignment.resize(static_cast<std::size_t>(n));
    std::size_t dim = 0;
    for (ElementId e = 0; e < n; ++e) {
      const json* v = values[static_cast<std::size_t>(e)];
      if (!v) continue;
      auto& out = fa.assignment[static_cast<std::size_t>(e)];
      if (v->is_array()) {
        for (std::size_t k = 0; k < v->size(); ++k)
          out.push_back(rational_from_json((*v)[k], where(e) + "[" + std::to_string(k) + "]"));
      } else {
        out.push_back(rational_from_json(*v, where(e)));
      }
      dim = out.size();
    }
    if (!values[kZero]) fa.assignment[kZero].assign(dim, Rational(0));
    if (!values[kOne]) fa.assignment[kOne].assign(dim, Rational(1));
    return {ModelKind::Fuzzy, std::move(fa)};
  }

  if (kind == "quantum") {
    std::vector<ComplexMatrix> mats(static_cast<std::size_t>(n));
    std::size_t dim = 0;
    for (ElementId e = 0; e < n; ++e) {
      const json* v = values[static_cast<std::size_t>(e)];
      if (!v) continue;
      if (!v->is_array()) fail_json(where(e), "expected a matrix (array of rows)");
      auto& out = mats[static_cast<std::size_t>(e)];
      for (std::size_t r = 0; r < v->size(); ++r) {
        const json& row = (*v)[r];
        const std::string rw = where(e) + "[" + std::to_string(r) + "]";
        if (!row.is_array()) fail_json(rw, "expected an array");
        std::vector<std::complex<double>> out_row;
        for (std::size_t c = 0; c < row.size(); ++c)
          out_row.push_back(complex_from_json(row[c], rw + "[" + std::to_string(c) + "]"));
        out.push_back(std::move(out_row));
      }
      dim = out.size();
    }
    auto square = [dim](double diag) {
      ComplexMatrix m(dim, std::vector<std::complex<double>>(dim, 0.0));
      for (std::size_t k = 0; k < dim; ++k) m[k][k] = diag;
      return m;
    };
    if (!values[kZero]) mats[kZero] = square(0.0);
    if (!values[kOne]) mats[kOne] = square(1.0);
    return {ModelKind::Quantum, std::move(mats)};
  }

  fail_json("kind", "expected \"multiplicative\", \"fuzzy\" or \"quantum\", got \"" + kind + "\"");
}

}  // namespace effalg
