#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordslack/comb_polytope.hpp"

namespace ordslack {

// A combinatorial isomorphism between two polytopes: facet and vertex
// bijections (A index -> B index) preserving the support.
struct Iso {
  std::vector<int> facet_map;
  std::vector<int> vertex_map;
};

// Exact isomorphism search on the bipartite vertex-facet incidence structure:
// iterative color refinement plus individualization backtracking. Sides are
// never mixed (facets map to facets).
std::optional<Iso> find_isomorphism(const CombPolytope& A, const CombPolytope& B);

// True iff the supports are permutation-equivalent with sides preserved.
bool combinatorially_equivalent(const CombPolytope& A, const CombPolytope& B);

// Canonical labeling of the incidence bipartite graph; the returned hex
// string is identical for equivalent polytopes and stable across runs.
// Intended for desk-scale targets (certificates); throws Error if the search
// exceeds its internal node budget.
std::string canonical_form(const CombPolytope& P);

}  // namespace ordslack
