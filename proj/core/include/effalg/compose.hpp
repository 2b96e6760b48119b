#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "effalg/effect_algebra.hpp"

namespace effalg {

// Cartesian product with componentwise partial sum.
//
// Composite elements: 0 = (0,0), 1 = (1,1), then the remaining pairs in lexicographic
// order where each factor is ordered 0, its nontrivial effects, 1. With this order
// S2 x S4 comes out as (0,e) (0,f) (0,1) (1,0) (1,e) (1,f).
struct CompositeAlgebra {
  EffectAlgebra algebra;
  std::vector<std::pair<ElementId, ElementId>> pairing;  // composite element -> (first, second)
  EffectAlgebra first;
  EffectAlgebra second;

  ElementId element_of(ElementId a, ElementId b) const;
};

CompositeAlgebra compose(const EffectAlgebra& a, const EffectAlgebra& b);

struct Factorization {
  EffectAlgebra first;
  EffectAlgebra second;
};

// First pair (n1 <= n2, factors in enumeration order) whose composite is isomorphic to
// the input, or nullopt. Enumerations of each factor order are cached process-wide.
std::optional<Factorization> is_composite(const EffectAlgebra& algebra);

// The copy {(e, 0)} (side 1) or {(0, e)} (side 2) as an algebra in its own right, whose
// unit is (1, 0) resp. (0, 1). embedding[x] is the composite element for component x.
struct Component {
  EffectAlgebra algebra;
  std::vector<ElementId> embedding;
};

// Throws std::invalid_argument for side other than 1 or 2.
Component component(const CompositeAlgebra& composite, int side);

}  // namespace effalg
