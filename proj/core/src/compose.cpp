#include "effalg/compose.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "effalg/canonical.hpp"
#include "effalg/enumerate.hpp"

namespace effalg {

namespace {

// Element at position r when a factor is listed as 0, nontrivial effects, 1.
ElementId from_rank(int r, int n) {
  if (r == 0) return kZero;
  if (r == n - 1) return kOne;
  return r + 1;
}

CellValue as_cell(std::optional<ElementId> v) {
  if (!v) return CellValue::undefined();
  if (*v == kOne) return CellValue::one();
  if (*v == kZero) return CellValue::zero_ref();
  return CellValue::effect(*v);
}

}  // namespace

ElementId CompositeAlgebra::element_of(ElementId a, ElementId b) const {
  for (std::size_t i = 0; i < pairing.size(); ++i)
    if (pairing[i] == std::make_pair(a, b)) return static_cast<ElementId>(i);
  throw std::out_of_range("no composite element (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

CompositeAlgebra compose(const EffectAlgebra& a, const EffectAlgebra& b) {
  const int n1 = a.order();
  const int n2 = b.order();
  const int n = n1 * n2;

  std::vector<std::pair<ElementId, ElementId>> pairing{{kZero, kZero}, {kOne, kOne}};
  for (int r1 = 0; r1 < n1; ++r1)
    for (int r2 = 0; r2 < n2; ++r2) {
      const auto p = std::make_pair(from_rank(r1, n1), from_rank(r2, n2));
      if (p != pairing[0] && p != pairing[1]) pairing.push_back(p);
    }
  std::vector<ElementId> index(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < pairing.size(); ++i)
    index[static_cast<std::size_t>(pairing[i].first * n2 + pairing[i].second)] = static_cast<ElementId>(i);

  SumTable table(n);
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < pairing.size(); ++i)
    labels[i] = "(" + a.table().label(pairing[i].first) + "," + b.table().label(pairing[i].second) + ")";
  table.set_labels(std::move(labels));

  for (ElementId x = 2; x < n; ++x)
    for (ElementId y = 2; y < n; ++y) {
      const auto [x1, x2] = pairing[static_cast<std::size_t>(x)];
      const auto [y1, y2] = pairing[static_cast<std::size_t>(y)];
      const auto s1 = a.sum(x1, y1);
      const auto s2 = b.sum(x2, y2);
      std::optional<ElementId> s;
      if (s1 && s2) s = index[static_cast<std::size_t>(*s1 * n2 + *s2)];
      table.set(x, y, as_cell(s));
    }

  // Validity is a theorem; a failure here is a bug and surfaces as InvalidAlgebra.
  return CompositeAlgebra{EffectAlgebra::from_table(table), std::move(pairing), a, b};
}

namespace {

const std::vector<EffectAlgebra>& cached_enumeration(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<EffectAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate(n).algebras).first;
  return it->second;
}

int self_complementary_count(const EffectAlgebra& a) {
  int k = 0;
  for (ElementId e = 2; e < a.order(); ++e) k += a.is_self_complementary(e) ? 1 : 0;
  return k;
}

}  // namespace

std::optional<Factorization> is_composite(const EffectAlgebra& algebra) {
  const int n = algebra.order();
  const auto target_defined = algebra.count_defined().defined;
  const int target_self = self_complementary_count(algebra);
  std::optional<SumTable> target;
  for (int n1 = 2; n1 * n1 <= n; ++n1) {
    if (n % n1 != 0) continue;
    const int n2 = n / n1;
    const auto& left = cached_enumeration(n1);
    const auto& right = cached_enumeration(n2);
    for (const auto& x : left)
      for (const auto& y : right) {
        const CompositeAlgebra c = compose(x, y);
        // Cheap invariants first; canonical forms are factorial in n.
        if (c.algebra.count_defined().defined != target_defined) continue;
        if (self_complementary_count(c.algebra) != target_self) continue;
        if (!target) target = canonical_form(algebra.table()).table;
        if (canonical_form(c.algebra.table()).table == *target) return Factorization{x, y};
      }
  }
  return std::nullopt;
}

Component component(const CompositeAlgebra& composite, int side) {
  if (side != 1 && side != 2) throw std::invalid_argument("component side must be 1 or 2");
  const EffectAlgebra& factor = side == 1 ? composite.first : composite.second;
  const int k = factor.order();

  std::vector<ElementId> embedding(static_cast<std::size_t>(k));
  for (ElementId e = 0; e < k; ++e)
    embedding[static_cast<std::size_t>(e)] =
        side == 1 ? composite.element_of(e, kZero) : composite.element_of(kZero, e);

  SumTable table(k);
  std::vector<std::string> labels(static_cast<std::size_t>(k));
  for (ElementId e = 0; e < k; ++e)
    labels[static_cast<std::size_t>(e)] = composite.algebra.table().label(embedding[static_cast<std::size_t>(e)]);
  table.set_labels(std::move(labels));
  for (ElementId x = 2; x < k; ++x)
    for (ElementId y = 2; y < k; ++y) {
      const auto s = composite.algebra.sum(embedding[static_cast<std::size_t>(x)], embedding[static_cast<std::size_t>(y)]);
      std::optional<ElementId> local;
      if (s) {
        const auto it = std::find(embedding.begin(), embedding.end(), *s);
        if (it == embedding.end()) throw std::logic_error("component is not closed under the sum");
        local = static_cast<ElementId>(it - embedding.begin());
      }
      table.set(x, y, as_cell(local));
    }
  Component out{EffectAlgebra::from_table(table), std::move(embedding)};
  if (!are_isomorphic(out.algebra.table(), factor.table()))
    throw std::logic_error("component is not isomorphic to its factor");
  return out;
}

}  // namespace effalg
