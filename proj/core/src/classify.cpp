#include "effalg/classify.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "effalg/catalog.hpp"

namespace effalg {

namespace {

void require_order(int n) {
  if (n < 2) throw std::invalid_argument("order must be at least 2, got " + std::to_string(n));
}

bool totally_ordered(const EffectAlgebra& a) {
  for (ElementId x = 0; x < a.order(); ++x)
    for (ElementId y = x + 1; y < a.order(); ++y)
      if (!a.leq(x, y) && !a.leq(y, x)) return false;
  return true;
}

std::optional<ElementId> single_generator(const EffectAlgebra& a) {
  const int n = a.order();
  if (n == 2) return kOne;
  for (ElementId g = 2; g < n; ++g) {
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    hit[kZero] = true;
    for (int m = 1;; ++m) {
      const auto x = a.multiple(g, m);
      if (!x) break;
      hit[static_cast<std::size_t>(*x)] = true;
      if (*x == kOne) break;
    }
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return g;
  }
  return std::nullopt;
}

bool has_full_row(const EffectAlgebra& a) {
  const int n = a.order();
  if (n == 2) return true;
  for (ElementId r = 2; r < n; ++r) {
    bool full = true;
    for (ElementId c = 2; c < n && full; ++c) full = a.defined(r, c);
    if (full) return true;
  }
  return false;
}

bool not_scale_shortcut(const EffectAlgebra& a) {
  for (ElementId e = 2; e < a.order(); ++e) {
    const ElementId f = a.complement_of(e);
    if (f != e && !a.defined(e, e) && !a.defined(f, f)) return true;
  }
  return false;
}

}  // namespace

std::optional<NotQuantumWitness> not_quantum_witness(const EffectAlgebra& a) {
  const int n = a.order();
  const int cap = 2 * n;
  // multiples[e][m] = m*e for m = 0..cap, if defined.
  std::vector<std::vector<std::optional<ElementId>>> multiples(static_cast<std::size_t>(n));
  for (ElementId e = 2; e < n; ++e) {
    auto& row = multiples[static_cast<std::size_t>(e)];
    row.resize(static_cast<std::size_t>(cap + 1));
    row[0] = kZero;
    for (int m = 1; m <= cap && row[static_cast<std::size_t>(m - 1)]; ++m)
      row[static_cast<std::size_t>(m)] = a.sum(*row[static_cast<std::size_t>(m - 1)], e);
  }
  for (ElementId e = 2; e < n; ++e)
    for (ElementId f = e + 1; f < n; ++f)
      for (int m = 2; m <= cap; ++m) {
        const auto& x = multiples[static_cast<std::size_t>(e)][static_cast<std::size_t>(m)];
        const auto& y = multiples[static_cast<std::size_t>(f)][static_cast<std::size_t>(m)];
        if (!x || !y) break;
        if (*x == *y) return NotQuantumWitness{e, f, m};
      }
  return std::nullopt;
}

Classification classify(const EffectAlgebra& a) {
  const int n = a.order();
  Classification c;
  c.n = n;
  c.defined_count = a.count_defined().defined;
  c.is_totally_ordered = totally_ordered(a);
  const auto generator = single_generator(a);
  const bool full_row = has_full_row(a);
  if (c.is_totally_ordered != generator.has_value() || c.is_totally_ordered != full_row)
    throw std::logic_error("scale criteria disagree: total order " + std::to_string(c.is_totally_ordered) +
                           ", generator " + std::to_string(generator.has_value()) + ", full row " +
                           std::to_string(full_row));
  c.is_scale = c.is_totally_ordered;
  c.scale_generator = generator;
  c.not_scale_precheck = not_scale_shortcut(a);
  if (c.not_scale_precheck && c.is_scale) throw std::logic_error("scale algebra has a complementary pair with e + e undefined");

  int pairs = 0;
  for (ElementId e = 2; e < n; ++e) {
    if (a.is_self_complementary(e)) ++c.self_complementary_count;
    else if (a.complement_of(e) > e) ++pairs;
  }
  c.is_sparse = c.defined_count == min_defined(n);
  if (c.is_sparse) c.sparse_params = std::make_pair(c.self_complementary_count, pairs);

  if (const CatalogEntry* entry = lookup(a.table())) {
    c.family_name = entry->name;
  } else if (c.is_scale) {
    c.family_name = "S" + std::to_string(n);
  } else if (c.is_sparse) {
    const auto [k, l] = *c.sparse_params;
    if (l == 0) c.family_name = "D" + std::to_string(n);
    else if (k == 0) c.family_name = "P" + std::to_string(n);
    else c.family_name = "E" + std::to_string(n) + "(" + std::to_string(k) + "," + std::to_string(l) + ")";
  }
  c.not_quantum_witness = not_quantum_witness(a);
  return c;
}

int sparse_count(int n) {
  require_order(n);
  if (n == 2) return 1;
  return n % 2 == 0 ? n / 2 : (n - 1) / 2;
}

int max_defined(int n) {
  require_order(n);
  return (n - 1) * (n - 2) / 2;
}

int min_defined(int n) {
  require_order(n);
  return n - 2;
}

}  // namespace effalg
