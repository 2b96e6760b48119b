#include "effalg/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "effalg/canonical.hpp"
#include "effalg/io.hpp"

namespace effalg {

EffectAlgebra make_scale(int n) {
  if (n < 2) throw std::invalid_argument("make_scale needs n >= 2, got " + std::to_string(n));
  SumTable t(n);
  // Element k/(n-1) is id k + 1.
  for (int k = 1; k <= n - 2; ++k)
    for (int m = 1; m <= n - 2; ++m) {
      const int s = k + m;
      t.set(k + 1, m + 1, s < n - 1 ? CellValue::effect(s + 1) : s == n - 1 ? CellValue::one() : CellValue::undefined());
    }
  return EffectAlgebra::from_table(t);
}

EffectAlgebra make_sparse(int k, int l) {
  if (k < 0 || l < 0 || k + 2 * l < 1)
    throw std::invalid_argument("make_sparse needs k, l >= 0 and k + 2l >= 1");
  const int n = 2 + k + 2 * l;
  SumTable t(n);
  for (int j = 0; j < k; ++j) t.set(2 + j, 2 + j, CellValue::one());
  for (int j = 0; j < l; ++j) {
    const ElementId e = 2 + k + 2 * j;
    t.set_symmetric(e, e + 1, CellValue::one());
  }
  return EffectAlgebra::from_table(t);
}

namespace {

EffectAlgebra from_doc(const char* doc) { return EffectAlgebra::from_table(parse_text_table(doc)); }

RationalVector values(std::initializer_list<const char*> xs) {
  RationalVector out;
  for (const char* x : xs) out.push_back(parse_rational(x));
  return out;
}

ExpectedSummary scale_summary(int n) {
  ExpectedSummary s;
  s.quantum = true;
  s.scale = true;
  s.defined_count = (n - 1) * (n - 2) / 2;
  if (n - 2 == s.defined_count) s.sparse_params = std::make_pair(n - 2, 0);
  s.state_dimension = 0;
  s.vertex_count = 1;
  RationalVector u;
  for (int k = 1; k <= n - 2; ++k) u.push_back(fraction(k, n - 1));
  s.unique_state = u;
  s.separating = true;
  s.order_determining = true;
  s.min_fuzzy_dimension = 1;
  return s;
}

ExpectedSummary dn_summary(int n) {
  ExpectedSummary s;
  s.defined_count = n - 2;
  s.sparse_params = std::make_pair(n - 2, 0);
  s.state_dimension = 0;
  s.vertex_count = 1;
  s.unique_state = RationalVector(static_cast<std::size_t>(n - 2), Rational(1, 2));
  s.separating = false;
  s.order_determining = false;
  return s;
}

ExpectedSummary pn_summary(int n) {
  const int l = (n - 2) / 2;
  ExpectedSummary s;
  s.quantum = true;
  s.defined_count = n - 2;
  s.sparse_params = std::make_pair(0, l);
  s.state_dimension = l;
  s.vertex_count = 1 << l;
  s.separating = true;
  s.order_determining = true;
  return s;
}

// A single non-separating state.
ExpectedSummary unique_state_summary(int defined, RationalVector u) {
  ExpectedSummary s;
  s.defined_count = defined;
  s.state_dimension = 0;
  s.vertex_count = 1;
  s.unique_state = std::move(u);
  s.separating = false;
  s.order_determining = false;
  return s;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, std::vector<std::string> aliases, EffectAlgebra a, std::string description,
                 ExpectedSummary s) {
    out.push_back(CatalogEntry{std::move(name), std::move(aliases), std::move(a), std::move(description), std::move(s)});
  };

  add("S2", {}, make_scale(2), "the unique two-element algebra", scale_summary(2));
  add("S3", {"D3"}, make_scale(3), "the unique three-element algebra", scale_summary(3));

  add("D4", {}, from_doc("n=4; e: I -; f: - I"), "sparse, two self-complementary effects", dn_summary(4));
  {
    auto s = pn_summary(4);
    s.composite = true;
    s.min_fuzzy_dimension = 2;
    add("P4", {}, from_doc("n=4; e: - I; f: I -"), "sparse, one complementary pair; S2 x S2", s);
  }
  add("S4", {}, from_doc("n=4; e: f I; f: I -"), "scale {0, 1/3, 2/3, 1}", scale_summary(4));

  add("D5", {}, from_doc("n=5; e: I - -; f: - I -; g: - - I"), "sparse, three self-complementary effects", dn_summary(5));
  {
    ExpectedSummary s;
    s.quantum = true;
    s.defined_count = 3;
    s.sparse_params = std::make_pair(1, 1);
    s.state_dimension = 1;
    s.vertex_count = 2;
    s.separating = true;
    s.order_determining = true;
    add("E5(1,1)", {}, from_doc("n=5; e: I - -; f: - - I; g: - I -"), "sparse, one self-complementary effect and one pair", s);
  }
  {
    ExpectedSummary s;
    s.defined_count = 4;
    s.state_dimension = 0;
    s.vertex_count = 1;
    s.unique_state = values({"1/3", "1/2", "2/3"});
    s.separating = true;
    s.order_determining = false;
    add("E5(3)", {}, from_doc("n=5; e: g - I; f: - I -; g: I - -"), "weak scale {0, 1/3, 1/2, 2/3, 1}", s);
  }
  add("S5", {}, from_doc("n=5; e: f g I; f: g I -; g: I - -"), "scale {0, 1/4, 1/2, 3/4, 1}", scale_summary(5));

  add("D6", {}, from_doc("n=6; e: I - - -; f: - I - -; g: - - I -; h: - - - I"), "sparse, four self-complementary effects",
      dn_summary(6));
  add("P6", {}, from_doc("n=6; e: - I - -; f: I - - -; g: - - - I; h: - - I -"), "sparse, two complementary pairs",
      pn_summary(6));
  {
    ExpectedSummary s;
    s.defined_count = 4;
    s.sparse_params = std::make_pair(2, 1);
    s.state_dimension = 1;
    s.vertex_count = 2;
    s.separating = false;
    s.order_determining = false;
    add("E6(2,1)", {"E6(3)"}, from_doc("n=6; e: I - - -; f: - I - -; g: - - - I; h: - - I -"),
        "sparse, two self-complementary effects and one pair", s);
  }
  {
    ExpectedSummary s;
    s.quantum = true;
    s.defined_count = 5;
    s.state_dimension = 1;
    s.vertex_count = 2;
    s.separating = true;
    s.order_determining = true;
    add("E6(4)", {}, from_doc("n=6; e: f I - -; f: I - - -; g: - - - I; h: - - I -"), "e + e = f = e', one further pair", s);
  }
  add("E6(5)", {}, from_doc("n=6; e: f I - -; f: I - - -; g: - - I -; h: - - - I"), "e + e = f = e', two self-complementary effects",
      unique_state_summary(5, values({"1/3", "2/3", "1/2", "1/2"})));
  add("E6(6)", {}, from_doc("n=6; e: f I - -; f: I - - -; g: - - h I; h: - - I -"), "two copies of S4 sharing 0 and 1",
      unique_state_summary(6, values({"1/3", "2/3", "1/3", "2/3"})));
  {
    ExpectedSummary s;
    s.quantum = true;
    s.composite = true;
    s.defined_count = 7;
    s.state_dimension = 1;
    s.vertex_count = 2;
    s.separating = true;
    s.order_determining = true;
    add("E6(7)", {}, from_doc("n=6; e: - g - I; f: g h I -; g: - I - -; h: I - - -"), "S2 x S3", s);
  }
  add("E6(8)", {}, from_doc("n=6; e: f g I -; f: g I - -; g: I - - -; h: - - - I"), "S5 with an extra self-complementary effect",
      unique_state_summary(7, values({"1/4", "1/2", "3/4", "1/2"})));
  add("E6(9)", {}, from_doc("n=6; e: g h I -; f: h g - I; g: I - - -; h: - I - -"), "e + e = f + f with 3e = 1",
      unique_state_summary(8, values({"1/3", "1/3", "2/3", "2/3"})));
  add("S6", {}, from_doc("n=6; e: f g h I; f: g h I -; g: h I - -; h: I - - -"), "scale with step 1/5",
      scale_summary(6));

  {
    ExpectedSummary s;
    s.quantum = true;
    s.composite = true;
    s.defined_count = 12;
    s.separating = true;
    s.order_determining = true;
    s.min_fuzzy_dimension = 3;
    s.state_dimension = 2;
    s.vertex_count = 3;
    add("E8", {},
        from_doc("n = 8; labels: e f g h i j\n"
                 "e: - h i - - I\n"
                 "f: h - j - I -\n"
                 "g: i j - I - -\n"
                 "h: - - I - - -\n"
                 "i: - I - - - -\n"
                 "j: I - - - - -\n"),
        "eight-element algebra with fuzzy dimension 3 but a two-dimensional matrix model", s);
  }
  {
    ExpectedSummary s;
    s.defined_count = 18;
    s.state_dimension = -1;
    s.vertex_count = 0;
    s.separating = false;
    s.order_determining = false;
    add("R9", {},
        from_doc("n = 9; labels: e f g h i j k\n"
                 "e: h j k I - - -\n"
                 "f: j i h - k - I\n"
                 "g: k h j - - I -\n"
                 "h: I - - - - - -\n"
                 "i: - k - - I - -\n"
                 "j: - - I - - - -\n"
                 "k: - I - - - - -\n"),
        "nine-element algebra without states", s);
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
    for (const auto& a : e.aliases)
      if (a == name) return &e;
  }
  return nullptr;
}

const CatalogEntry* lookup(const SumTable& table) {
  static const std::vector<SumTable> canon = [] {
    std::vector<SumTable> out;
    for (const auto& e : catalog()) out.push_back(canonical_form(e.algebra.table()).table);
    return out;
  }();
  // Canonical forms are factorial in the order; skip orders the catalog does not have.
  if (std::none_of(catalog().begin(), catalog().end(),
                   [&](const CatalogEntry& e) { return e.algebra.order() == table.order(); }))
    return nullptr;
  const SumTable c = canonical_form(table).table;
  for (std::size_t i = 0; i < canon.size(); ++i)
    if (canon[i] == c) return &catalog()[i];
  return nullptr;
}

}  // namespace effalg
