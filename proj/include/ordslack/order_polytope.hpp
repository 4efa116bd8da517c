#pragma once

#include "ordslack/comb_polytope.hpp"
#include "ordslack/poset.hpp"

namespace ordslack {

// Facet of an order polytope: t_i >= 0 for minimal i, t_i <= t_j for covers
// i <. j, t_i <= 1 for maximal i.
struct FacetLabel {
  enum Kind { Min, Cover, Max } kind;
  int a = -1;
  int b = -1;  // only for Cover

  std::string to_string(const Poset& P) const;
};

// Stanley's description: dim = |elements|, vertices = filters in canonical
// order, facets = all Min / Cover / Max labels (minima first in element
// order, then covers lexicographically, then maxima). Empty poset gives the
// point.
CombPolytope order_polytope(const Poset& P);

// The facet labels in row order, for callers that need the structured form.
std::vector<FacetLabel> order_polytope_facets(const Poset& P);

}  // namespace ordslack
