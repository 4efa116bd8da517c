#include "ordslack/order_polytope.hpp"

namespace ordslack {

std::string FacetLabel::to_string(const Poset& P) const {
  switch (kind) {
    case Min:
      return "min:" + P.label(a);
    case Cover:
      return "cov:" + P.label(a) + "<" + P.label(b);
    case Max:
      return "max:" + P.label(a);
  }
  return {};
}

std::vector<FacetLabel> order_polytope_facets(const Poset& P) {
  std::vector<FacetLabel> out;
  for (int i : P.minimal_elements()) out.push_back({FacetLabel::Min, i, -1});
  for (const auto& [a, b] : P.covers()) out.push_back({FacetLabel::Cover, a, b});
  for (int i : P.maximal_elements()) out.push_back({FacetLabel::Max, i, -1});
  return out;
}

CombPolytope order_polytope(const Poset& P) {
  if (P.size() == 0) return point_polytope();
  CombPolytope C;
  C.dim = P.size();
  const auto filters = enumerate_filters(P);
  for (const auto& f : filters) C.vertex_labels.push_back(filter_label(P, f));
  const auto facets = order_polytope_facets(P);
  for (const auto& F : facets) {
    std::vector<std::uint8_t> row(filters.size(), 0);
    for (std::size_t j = 0; j < filters.size(); ++j) {
      const Filter& J = filters[j];
      bool slack = false;
      switch (F.kind) {
        case FacetLabel::Min:
          slack = J.contains(F.a);  // t_i = 1 > 0
          break;
        case FacetLabel::Cover:
          slack = !J.contains(F.a) && J.contains(F.b);  // t_i = 0 < t_j = 1
          break;
        case FacetLabel::Max:
          slack = !J.contains(F.a);  // t_i = 0 < 1
          break;
      }
      row[j] = slack ? 1 : 0;
    }
    C.facet_labels.push_back(F.to_string(P));
    C.support.push_back(std::move(row));
  }
  C.check_structure();
  return C;
}

}  // namespace ordslack
