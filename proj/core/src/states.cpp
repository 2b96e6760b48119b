#include "effalg/states.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "effalg/linalg.hpp"

namespace effalg {

bool is_state(const EffectAlgebra& algebra, const State& sigma) {
  const int n = algebra.order();
  if (sigma.size() != static_cast<std::size_t>(n)) return false;
  if (sigma[kZero] != 0 || sigma[kOne] != 1) return false;
  for (const auto& v : sigma)
    if (v < 0 || v > 1) return false;
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = a; b < n; ++b)
      if (const auto s = algebra.sum(a, b); s && sigma[a] + sigma[b] != sigma[*s]) return false;
  return true;
}

namespace {

// Position r of the parametrised solution: value = p[r] + sum_k t_k kernel[k][r].
struct Parametrisation {
  RationalVector p;
  std::vector<RationalVector> kernel;

  Rational value(std::size_t r, const RationalVector& t) const {
    Rational v = p[r];
    for (std::size_t k = 0; k < kernel.size(); ++k) v += t[k] * kernel[k][r];
    return v;
  }
  bool moves(std::size_t r) const {
    return std::any_of(kernel.begin(), kernel.end(), [r](const RationalVector& k) { return k[r] != 0; });
  }
};

State lift(const RationalVector& x) {
  State s;
  s.reserve(x.size() + 2);
  s.emplace_back(0);
  s.emplace_back(1);
  s.insert(s.end(), x.begin(), x.end());
  return s;
}

bool in_box(const RationalVector& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v >= 0 && v <= 1; });
}

// Calls f on every k-subset of {0..n-1} in lexicographic order; stops when f returns true.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// sigma(i) + sigma(j) - sigma(i + j) = 0, or sigma(i) + sigma(j) = 1 when i + j = 1,
// over the defined cells of the upper triangle.
std::pair<RationalMatrix, RationalVector> additivity_system(const EffectAlgebra& algebra) {
  const int n = algebra.order();
  const std::size_t m = static_cast<std::size_t>(n - 2);
  RationalMatrix a;
  RationalVector b;
  for (ElementId i = 2; i < n; ++i)
    for (ElementId j = i; j < n; ++j) {
      const auto s = algebra.sum(i, j);
      if (!s) continue;
      RationalVector row(m, Rational(0));
      row[static_cast<std::size_t>(i - 2)] += 1;
      row[static_cast<std::size_t>(j - 2)] += 1;
      if (*s == kOne) {
        b.emplace_back(1);
      } else {
        row[static_cast<std::size_t>(*s - 2)] -= 1;
        b.emplace_back(0);
      }
      a.push_back(std::move(row));
    }
  return {std::move(a), std::move(b)};
}

}  // namespace

StatePolytope state_space(const EffectAlgebra& algebra) {
  const int n = algebra.order();
  const std::size_t m = static_cast<std::size_t>(n - 2);
  StatePolytope out;
  const auto [a, b] = additivity_system(algebra);
  const auto sol = solve_affine(a, b, m);
  if (!sol) return out;
  const Parametrisation par{sol->particular, sol->kernel};
  const std::size_t d = par.kernel.size();

  // Box facets that vary along the solution set; fixed coordinates must already lie in [0,1].
  struct Facet {
    std::size_t row;
    int bound;
  };
  std::vector<Facet> facets;
  for (std::size_t r = 0; r < m; ++r) {
    if (par.moves(r)) {
      facets.push_back({r, 0});
      facets.push_back({r, 1});
    } else if (par.p[r] < 0 || par.p[r] > 1) {
      return out;
    }
  }

  std::set<RationalVector> found;
  if (d == 0) {
    if (in_box(par.p)) found.insert(par.p);
  } else {
    for_each_subset(facets.size(), d, [&](const std::vector<std::size_t>& pick) {
      RationalMatrix sys;
      RationalVector rhs;
      for (std::size_t idx : pick) {
        const Facet& f = facets[idx];
        RationalVector row(d);
        for (std::size_t k = 0; k < d; ++k) row[k] = par.kernel[k][f.row];
        sys.push_back(std::move(row));
        rhs.push_back(Rational(f.bound) - par.p[f.row]);
      }
      const auto t = solve_unique(sys, rhs);
      if (!t) return false;
      RationalVector x(m);
      for (std::size_t r = 0; r < m; ++r) x[r] = par.value(r, *t);
      if (in_box(x)) found.insert(std::move(x));
      return false;
    });
  }
  if (found.empty()) return out;

  for (const auto& x : found) out.vertices.push_back(lift(x));
  out.basepoint = out.vertices.front();

  RationalMatrix diffs;
  for (std::size_t v = 1; v < out.vertices.size(); ++v) {
    RationalVector diff(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < diff.size(); ++r) diff[r] = out.vertices[v][r] - out.vertices[0][r];
    diffs.push_back(std::move(diff));
  }
  const auto pivots = row_reduce(diffs);
  out.dimension = static_cast<int>(pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) out.directions.push_back(diffs[r]);
  return out;
}

std::vector<State> grid_states(const EffectAlgebra& algebra, int max_denominator, std::size_t limit) {
  if (max_denominator < 1) throw std::invalid_argument("grid_states needs max_denominator >= 1");
  const auto [a, b] = additivity_system(algebra);
  const std::size_t m = static_cast<std::size_t>(algebra.order() - 2);
  std::vector<State> out;
  const auto sol = solve_affine(a, b, m);
  if (!sol) return out;

  std::set<Rational> values;
  for (int q = 1; q <= max_denominator; ++q)
    for (int p = 0; p <= q; ++p) values.insert(fraction(p, q));
  const std::vector<Rational> farey(values.begin(), values.end());

  // Each kernel vector has a 1 in its free column and 0 in the other free columns, so the
  // parameters are the values of the free coordinates.
  const std::size_t d = sol->kernel.size();
  std::set<RationalVector> found;
  std::vector<std::size_t> pick(d, 0);
  while (found.size() < limit) {
    RationalVector x = sol->particular;
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t r = 0; r < m; ++r) x[r] += farey[pick[k]] * sol->kernel[k][r];
    if (std::all_of(x.begin(), x.end(), [&](const Rational& v) {
          return v >= 0 && v <= 1 && v.get_den() <= static_cast<unsigned long>(max_denominator);
        }))
      found.insert(std::move(x));
    std::size_t k = 0;
    while (k < d && ++pick[k] == farey.size()) pick[k++] = 0;
    if (k == d) break;
  }
  for (const auto& x : found) out.push_back(lift(x));
  return out;
}

bool is_separating(const EffectAlgebra& algebra, const std::vector<State>& states) {
  const int n = algebra.order();
  for (ElementId e = 0; e < n; ++e)
    for (ElementId f = e + 1; f < n; ++f)
      if (std::none_of(states.begin(), states.end(), [&](const State& s) { return s[e] != s[f]; })) return false;
  return true;
}

bool is_separating(const EffectAlgebra& algebra, const StatePolytope& polytope) {
  return is_separating(algebra, polytope.vertices);
}

bool is_order_determining(const EffectAlgebra& algebra, const std::vector<State>& states) {
  const int n = algebra.order();
  for (ElementId e = 0; e < n; ++e)
    for (ElementId f = 0; f < n; ++f) {
      if (algebra.leq(e, f)) continue;
      if (std::none_of(states.begin(), states.end(), [&](const State& s) { return s[e] > s[f]; })) return false;
    }
  return true;
}

bool is_order_determining(const EffectAlgebra& algebra, const StatePolytope& polytope) {
  return is_order_determining(algebra, polytope.vertices);
}

bool is_quantum(const EffectAlgebra& algebra) { return is_order_determining(algebra, state_space(algebra)); }

FuzzyEmbedding fuzzy_embedding(const EffectAlgebra& algebra, const std::vector<State>& states) {
  if (!is_order_determining(algebra, states))
    throw std::invalid_argument("states are not order-determining; the map is not a monomorphism");
  const int n = algebra.order();
  FuzzyEmbedding phi(static_cast<std::size_t>(n));
  for (ElementId e = 0; e < n; ++e)
    for (const auto& s : states) phi[static_cast<std::size_t>(e)].push_back(s[e]);
  return phi;
}

std::optional<std::vector<std::size_t>> minimal_order_determining_subset(const EffectAlgebra& algebra,
                                                                         const std::vector<State>& vertices) {
  const int n = algebra.order();
  // One requirement per pair e not <= f: the vertices with sigma(e) > sigma(f).
  std::set<std::vector<char>> requirements;
  for (ElementId e = 0; e < n; ++e)
    for (ElementId f = 0; f < n; ++f) {
      if (algebra.leq(e, f)) continue;
      std::vector<char> hit(vertices.size());
      bool any = false;
      for (std::size_t v = 0; v < vertices.size(); ++v) {
        hit[v] = vertices[v][e] > vertices[v][f];
        any = any || hit[v];
      }
      if (!any) return std::nullopt;
      requirements.insert(std::move(hit));
    }
  if (requirements.empty()) return std::vector<std::size_t>{};

  std::vector<std::size_t> best;
  for (std::size_t k = 1; k <= vertices.size(); ++k) {
    const bool done = for_each_subset(vertices.size(), k, [&](const std::vector<std::size_t>& pick) {
      for (const auto& req : requirements)
        if (std::none_of(pick.begin(), pick.end(), [&](std::size_t v) { return req[v] != 0; })) return false;
      best = pick;
      return true;
    });
    if (done) return best;
  }
  return std::nullopt;
}

std::optional<int> min_fuzzy_dimension(const EffectAlgebra& algebra) {
  const auto poly = state_space(algebra);
  const auto subset = minimal_order_determining_subset(algebra, poly.vertices);
  if (!subset) return std::nullopt;
  return static_cast<int>(subset->size());
}

StateAnalysis analyze_states(const EffectAlgebra& algebra) {
  StateAnalysis out;
  out.polytope = state_space(algebra);
  out.is_separating = is_separating(algebra, out.polytope);
  out.is_order_determining = is_order_determining(algebra, out.polytope);
  out.is_quantum = out.is_order_determining;
  if (out.is_quantum) {
    const auto subset = minimal_order_determining_subset(algebra, out.polytope.vertices);
    if (!subset) throw std::logic_error("order-determining vertex set without an order-determining subset");
    std::vector<State> chosen;
    for (std::size_t v : *subset) chosen.push_back(out.polytope.vertices[v]);
    out.min_fuzzy_dimension = static_cast<int>(chosen.size());
    out.fuzzy_embedding = fuzzy_embedding(algebra, chosen);
  }
  return out;
}

State product_state(const CompositeAlgebra& composite, const State& sigma1, const State& sigma2, const Rational& t) {
  if (t < 0 || t > 1) throw std::invalid_argument("product_state weight must lie in [0, 1], got " + to_string(t));
  if (!is_state(composite.first, sigma1)) throw std::invalid_argument("product_state: first argument is not a state");
  if (!is_state(composite.second, sigma2)) throw std::invalid_argument("product_state: second argument is not a state");
  State out;
  out.reserve(composite.pairing.size());
  for (const auto& [a, b] : composite.pairing) out.push_back(t * sigma1[a] + (1 - t) * sigma2[b]);
  return out;
}

std::optional<State> marginal_state(const CompositeAlgebra& composite, const State& sigma, int side) {
  if (side != 1 && side != 2) throw std::invalid_argument("marginal side must be 1 or 2");
  if (sigma.size() != composite.pairing.size())
    throw std::invalid_argument("marginal_state: vector does not match the composite order");
  const EffectAlgebra& factor = side == 1 ? composite.first : composite.second;
  auto at = [&](ElementId e) {
    return sigma[static_cast<std::size_t>(side == 1 ? composite.element_of(e, kZero) : composite.element_of(kZero, e))];
  };
  const Rational norm = at(kOne);
  if (norm == 0) return std::nullopt;
  State out;
  for (ElementId e = 0; e < factor.order(); ++e) out.push_back(at(e) / norm);
  return out;
}

}  // namespace effalg
