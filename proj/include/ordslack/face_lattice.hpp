#pragma once

#include <vector>

#include "ordslack/comb_polytope.hpp"

namespace ordslack {

// Intersection closure of the facet vertex-sets, ordered by inclusion.
// Contains the empty face and the full polytope. rank is the chain depth
// from the empty face minus one, so vertices sit at rank 0 and the polytope
// at rank dim for genuine inputs.
struct FaceLattice {
  struct Face {
    std::vector<int> vertices;  // sorted vertex indices
    int rank = -1;
  };
  std::vector<Face> faces;                    // sorted by (size, vertex set)
  std::vector<std::pair<int, int>> hasse;     // (lower face, upper face) covers

  int face_index(const std::vector<int>& verts) const;  // -1 if absent
};

// Throws CapExceeded past 50000 faces.
FaceLattice face_lattice(const CombPolytope& P);

// A complete flag per the triangular-submatrix lemma: facet indices G_0..G_d
// and vertex indices w_0..w_d such that the (d+1)x(d+1) submatrix
// support[G_i][w_j] is upper triangular with ones on the diagonal.
// Throws FlagNotFound if the incidence data does not admit one.
struct Flag {
  std::vector<int> facets;    // G_0 .. G_d
  std::vector<int> vertices;  // w_0 .. w_d
};
Flag find_flag(const CombPolytope& P);

// DOT rendering of the face lattice (Hasse edges upward).
std::string face_lattice_to_dot(const CombPolytope& P, const FaceLattice& L);

}  // namespace ordslack
