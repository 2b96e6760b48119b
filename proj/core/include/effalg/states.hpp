#pragma once

#include <optional>
#include <vector>

#include "effalg/compose.hpp"
#include "effalg/effect_algebra.hpp"
#include "effalg/rational.hpp"

namespace effalg {

// A state as its full value vector indexed by ElementId (so values[0] = 0, values[1] = 1).
using State = RationalVector;

// sigma(1) = 1, sigma(0) = 0, values in [0, 1], additive on every defined sum.
bool is_state(const EffectAlgebra& algebra, const State& sigma);

struct StatePolytope {
  int dimension = -1;                   // -1 when there are no states
  std::optional<State> basepoint;       // the first vertex
  std::vector<RationalVector> directions;  // basis of the affine hull, length n, zero on 0 and 1
  std::vector<State> vertices;          // sorted lexicographically

  bool empty() const { return vertices.empty(); }
};

// Exact description of all states. Additivity on the upper triangle is solved by
// rational elimination; the solution space is cut by the box [0,1] and its vertices are
// found by solving every square subsystem of box facets.
StatePolytope state_space(const EffectAlgebra& algebra);

// States whose values all have denominator <= max_denominator, in lexicographic order.
// Values are chosen for a free coordinate set of the additivity equations and the rest
// is derived, so the cost grows with the grid size to the power of the state-space
// dimension. Stops after `limit` states.
std::vector<State> grid_states(const EffectAlgebra& algebra, int max_denominator, std::size_t limit = 1000000);

// Whether the given states tell every pair of distinct elements apart.
bool is_separating(const EffectAlgebra& algebra, const std::vector<State>& states);
bool is_separating(const EffectAlgebra& algebra, const StatePolytope& polytope);

// Whether sigma(e) <= sigma(f) for every given state forces e <= f.
bool is_order_determining(const EffectAlgebra& algebra, const std::vector<State>& states);
bool is_order_determining(const EffectAlgebra& algebra, const StatePolytope& polytope);

// Finite algebras are quantum exactly when their states are order-determining.
bool is_quantum(const EffectAlgebra& algebra);

// Phi(e)[k] = states[k](e), indexed by ElementId. Throws std::invalid_argument when the
// states are not order-determining (Phi would not be a monomorphism onto its image).
using FuzzyEmbedding = std::vector<RationalVector>;
FuzzyEmbedding fuzzy_embedding(const EffectAlgebra& algebra, const std::vector<State>& states);

// Indices of a smallest order-determining subset of `vertices` (smallest size first, then
// lexicographically least), or nullopt if even the full set is not order-determining.
std::optional<std::vector<std::size_t>> minimal_order_determining_subset(const EffectAlgebra& algebra,
                                                                         const std::vector<State>& vertices);

// Size of a smallest order-determining set of vertex states; nullopt when not quantum.
// An upper bound on the fuzzy dimension.
std::optional<int> min_fuzzy_dimension(const EffectAlgebra& algebra);

struct StateAnalysis {
  StatePolytope polytope;
  bool is_separating = false;
  bool is_order_determining = false;
  bool is_quantum = false;
  std::optional<int> min_fuzzy_dimension;
  std::optional<FuzzyEmbedding> fuzzy_embedding;  // built from the minimal vertex subset
};

StateAnalysis analyze_states(const EffectAlgebra& algebra);

// (e1, e2) -> t sigma1(e1) + (1 - t) sigma2(e2). Throws std::invalid_argument unless
// 0 <= t <= 1 and both inputs are states on the factors.
State product_state(const CompositeAlgebra& composite, const State& sigma1, const State& sigma2, const Rational& t);

// sigma restricted to component `side` and renormalised; nullopt when the normaliser
// sigma(1,0) (resp. sigma(0,1)) is zero. Throws std::invalid_argument for a bad side or a
// vector of the wrong length.
std::optional<State> marginal_state(const CompositeAlgebra& composite, const State& sigma, int side);

}  // namespace effalg
