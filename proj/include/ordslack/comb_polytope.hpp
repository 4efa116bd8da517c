#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordslack/error.hpp"

namespace ordslack {

// The sole polytope representation in this project: dimension, labeled
// vertex/facet sets and the 0/1 slack support (rows = facets, columns =
// vertices, entry 1 iff the vertex is off the facet). No coordinates
// anywhere.
//
// The point polytope is dim 0 with one vertex and no facets.
struct CombPolytope {
  int dim = 0;
  std::vector<std::string> vertex_labels;
  std::vector<std::string> facet_labels;
  std::vector<std::vector<std::uint8_t>> support;

  int num_vertices() const { return static_cast<int>(vertex_labels.size()); }
  int num_facets() const { return static_cast<int>(facet_labels.size()); }
  bool is_point() const { return dim == 0 && num_vertices() == 1 && num_facets() == 0; }

  int vertex_index(const std::string& label) const;  // throws NotAVertex
  int facet_index(const std::string& label) const;   // throws NotAFacet

  // Structural sanity: support shape, label uniqueness, and (except for the
  // point) no zero row, no zero column, no duplicate rows.
  void check_structure() const;
};

// Records which rows/columns a vertex split produced, so the type A/B cycle
// enumeration can find the facet pairing again.
struct SplitData {
  int bar_vertex = -1;                       // column of the new vertex off the F-bar rows
  int hat_vertex = -1;                       // column of the new vertex off the F-hat rows
  std::vector<int> kept_facets;              // rows for facets that contained p
  std::vector<std::pair<int, int>> pairs;    // (bar row, hat row) per facet off p
  std::vector<int> old_vertices;             // columns for V \ {p}
};

struct VertexSplitResult {
  CombPolytope poly;
  SplitData data;
};

CombPolytope point_polytope();
CombPolytope simplex(int d);    // d = 0 normalizes to the point
CombPolytope hypercube(int d);  // order polytope of the d-antichain

CombPolytope dual(const CombPolytope& P);

// Join: block-diagonal support. A point operand contributes a single base
// row (its empty face), which is what makes join(point, P) the pyramid.
CombPolytope join(const CombPolytope& P, const CombPolytope& Q);

// Cartesian product; facets are lifted facets of the factors.
CombPolytope product(const CombPolytope& P, const CombPolytope& Q);

// Vertex sum at (v, w). A point operand acts as the identity.
CombPolytope vertex_sum(const CombPolytope& P, const std::string& v,
                        const CombPolytope& Q, const std::string& w);

// Vertex split at p. Splitting the point yields the segment.
VertexSplitResult vertex_split(const CombPolytope& P, const std::string& p);

// Duals of split and sum. Implemented through the dual route; the direct
// support formulas live in *_direct below and must agree with these.
CombPolytope facet_wedge(const CombPolytope& P, const std::string& F);
CombPolytope facet_product(const CombPolytope& P, const std::string& F1,
                           const CombPolytope& Q, const std::string& F2);

// Direct slack-support constructions of the same operations (the matrices in
// the facet wedge / facet product proofs). Exposed for cross-validation.
CombPolytope facet_wedge_direct(const CombPolytope& P, const std::string& F);
CombPolytope facet_product_direct(const CombPolytope& P, const std::string& F1,
                                  const CombPolytope& Q, const std::string& F2);

// JSON: {"dim": d, "vertices": [...], "facets": [...], "support": [[0/1...]]}
CombPolytope polytope_from_json(const std::string& text);
std::string polytope_to_json(const CombPolytope& P);

}  // namespace ordslack
