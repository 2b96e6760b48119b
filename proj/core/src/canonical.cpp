#include "effalg/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace effalg {

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation inverse(const Permutation& perm) {
  Permutation inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<ElementId>(i);
  return inv;
}

namespace {

void check_permutation(const Permutation& perm, int n) {
  if (perm.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("permutation has " + std::to_string(perm.size()) + " entries, expected " +
                                std::to_string(n));
  if (n >= 1 && perm[0] != kZero) throw std::invalid_argument("permutation must fix the zero effect");
  if (n >= 2 && perm[1] != kOne) throw std::invalid_argument("permutation must fix the unit");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (ElementId v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

CellValue relabel(CellValue v, const Permutation& perm) {
  return v.is_effect() ? CellValue::effect(perm[v.code()]) : v;
}

}  // namespace

SumTable apply_permutation(const SumTable& table, const Permutation& perm) {
  const int n = table.order();
  check_permutation(perm, n);
  SumTable out(n);
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (ElementId a = 0; a < n; ++a) labels[static_cast<std::size_t>(perm[a])] = table.label(a);
  out.set_labels(std::move(labels));
  for (ElementId a = 2; a < n; ++a)
    for (ElementId b = 2; b < n; ++b) out.set(perm[a], perm[b], relabel(table.cell(a, b), perm));
  return out;
}

CanonicalForm canonical_form(const SumTable& table) {
  const int n = table.order();
  const int m = n - 2;
  if (m <= 1) {
    SumTable canon = table;
    canon.set_labels(default_labels(n));
    return {std::move(canon), identity_permutation(n)};
  }

  // Positions of the row-major upper triangle.
  std::vector<std::pair<ElementId, ElementId>> positions;
  for (ElementId a = 2; a < n; ++a)
    for (ElementId b = a; b < n; ++b) positions.emplace_back(a, b);

  // source[new] = old; perm = inverse(source).
  Permutation source = identity_permutation(n);
  Permutation perm = identity_permutation(n);
  Permutation best_perm;
  std::vector<CellValue> best;

  auto value_at = [&](std::size_t k) {
    auto [a, b] = positions[k];
    return relabel(table.cell(source[a], source[b]), perm);
  };

  do {
    for (ElementId i = 2; i < n; ++i) perm[source[i]] = i;
    if (best.empty()) {
      best.resize(positions.size());
      for (std::size_t k = 0; k < positions.size(); ++k) best[k] = value_at(k);
      best_perm = perm;
      continue;
    }
    std::size_t k = 0;
    CellValue v;
    for (; k < positions.size(); ++k) {
      v = value_at(k);
      if (v != best[k]) break;
    }
    if (k == positions.size()) {
      if (perm < best_perm) best_perm = perm;
    } else if (v < best[k]) {
      best[k] = v;
      for (std::size_t j = k + 1; j < positions.size(); ++j) best[j] = value_at(j);
      best_perm = perm;
    }
  } while (std::next_permutation(source.begin() + 2, source.end()));

  SumTable canon = apply_permutation(table, best_perm);
  canon.set_labels(default_labels(n));
  return {std::move(canon), std::move(best_perm)};
}

bool are_isomorphic(const SumTable& a, const SumTable& b) {
  if (a.order() != b.order()) return false;
  return canonical_form(a).table == canonical_form(b).table;
}

}  // namespace effalg
