#include <algorithm>
#include <set>

#include "doctest.h"
#include "effalg/classify.hpp"
#include "effalg/compose.hpp"
#include "effalg/enumerate.hpp"
#include "effalg/states.hpp"
#include "support.hpp"

using namespace effalg;

namespace {

// All states with values in {p/q : q <= max_den}, by trying every assignment.
std::vector<State> brute_force_states(const EffectAlgebra& a, int max_den) {
  std::set<Rational> grid;
  for (int q = 1; q <= max_den; ++q)
    for (int p = 0; p <= q; ++p) grid.insert(fraction(p, q));
  const std::vector<Rational> values(grid.begin(), grid.end());
  const int n = a.order();
  std::vector<State> out;
  State s(static_cast<std::size_t>(n));
  s[0] = 0;
  s[1] = 1;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    for (int e = 2; e < n; ++e) s[static_cast<std::size_t>(e)] = values[idx[static_cast<std::size_t>(e)]];
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (const auto z = a.sum(x, y)) ok = s[static_cast<std::size_t>(*z)] == s[static_cast<std::size_t>(x)] + s[static_cast<std::size_t>(y)];
    if (ok) out.push_back(s);
    int e = 2;
    while (e < n && ++idx[static_cast<std::size_t>(e)] == values.size()) idx[static_cast<std::size_t>(e++)] = 0;
    if (e == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

State state_of(const RationalVector& nontrivial) {
  State s{0, 1};
  s.insert(s.end(), nontrivial.begin(), nontrivial.end());
  return s;
}

}  // namespace

TEST_CASE("grid states agree with brute force") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& a : enumerate(n).algebras) {
      const auto grid = grid_states(a, 6);
      CHECK(grid == brute_force_states(a, 6));
      for (const auto& s : grid) CHECK(is_state(a, s));
    }
  }
}

TEST_CASE("polytope vertices are states and the grid lies in their span") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& a : enumerate(n).algebras) {
      const auto p = state_space(a);
      const auto brute = brute_force_states(a, 6);
      if (p.empty()) {
        CHECK(brute.empty());
        continue;
      }
      for (const auto& v : p.vertices) {
        CHECK(is_state(a, v));
        // Vertices of these small polytopes have small denominators.
        CHECK(std::binary_search(brute.begin(), brute.end(), v));
      }
      CHECK(std::is_sorted(p.vertices.begin(), p.vertices.end()));
      CHECK(p.dimension == static_cast<int>(p.directions.size()));
      // A polytope of dimension d has at least d + 1 vertices.
      CHECK(static_cast<int>(p.vertices.size()) >= p.dimension + 1);
      if (p.vertices.size() == 1) CHECK(brute.size() == 1);
    }
  }
}

TEST_CASE("catalog state summaries") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const auto p = state_space(e.algebra);
    CHECK(p.dimension == e.expected.state_dimension);
    if (e.expected.vertex_count) CHECK(p.vertices.size() == static_cast<std::size_t>(*e.expected.vertex_count));
    if (e.expected.unique_state) {
      REQUIRE(p.vertices.size() == 1);
      CHECK(p.vertices[0] == state_of(*e.expected.unique_state));
    }
    if (e.expected.separating) CHECK(is_separating(e.algebra, p) == *e.expected.separating);
    if (e.expected.order_determining) CHECK(is_order_determining(e.algebra, p) == *e.expected.order_determining);
    CHECK(is_quantum(e.algebra) == e.expected.quantum);
  }
}

TEST_CASE("order-determining implies separating") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& a : enumerate(n).algebras) {
      const auto p = state_space(a);
      if (is_order_determining(a, p)) CHECK(is_separating(a, p));
    }
}

TEST_CASE("an m-fold collision rules out quantum") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& a : enumerate(n).algebras)
      if (not_quantum_witness(a)) CHECK_FALSE(is_quantum(a));
}

TEST_CASE("fuzzy embedding from the minimal vertex subset") {
  for (const char* name : {"S4", "P4", "E5(1,1)", "E6(4)", "E6(7)", "E8"}) {
    CAPTURE(name);
    const auto& a = testing::named(name);
    const auto s = analyze_states(a);
    REQUIRE(s.min_fuzzy_dimension.has_value());
    REQUIRE(s.fuzzy_embedding.has_value());
    CHECK(s.fuzzy_embedding->at(0).size() == static_cast<std::size_t>(*s.min_fuzzy_dimension));
    // Images of a sum are sums of images.
    for (ElementId x = 0; x < a.order(); ++x)
      for (ElementId y = 0; y < a.order(); ++y)
        if (const auto z = a.sum(x, y))
          for (std::size_t k = 0; k < s.fuzzy_embedding->at(0).size(); ++k)
            CHECK((*s.fuzzy_embedding)[static_cast<std::size_t>(*z)][k] ==
                  (*s.fuzzy_embedding)[static_cast<std::size_t>(x)][k] + (*s.fuzzy_embedding)[static_cast<std::size_t>(y)][k]);
  }
  CHECK(min_fuzzy_dimension(testing::named("S5")) == 1);
  CHECK(min_fuzzy_dimension(testing::named("E8")) == 3);
  CHECK_FALSE(min_fuzzy_dimension(testing::named("D4")).has_value());
  CHECK_THROWS_AS(fuzzy_embedding(testing::named("D4"), state_space(testing::named("D4")).vertices),
                  std::invalid_argument);
}

TEST_CASE("separating but not order-determining") {
  const auto& a = testing::named("E5(3)");
  const auto p = state_space(a);
  CHECK(is_separating(a, p));
  CHECK_FALSE(is_order_determining(a, p));
  CHECK_FALSE(minimal_order_determining_subset(a, p.vertices).has_value());
}

TEST_CASE("is_state rejects bad vectors") {
  const auto& s4 = testing::named("S4");
  CHECK(is_state(s4, State{0, 1, Rational(1, 3), Rational(2, 3)}));
  CHECK_FALSE(is_state(s4, State{0, 1, Rational(1, 2), Rational(1, 2)}));
  CHECK_FALSE(is_state(s4, State{0, 1, Rational(1, 3)}));
  CHECK_FALSE(is_state(s4, State{1, 1, Rational(1, 3), Rational(2, 3)}));
}
