#include "ordslack/comb_polytope.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace ordslack {

int CombPolytope::vertex_index(const std::string& label) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertex_labels[i] == label) return i;
  throw NotAVertex("no vertex labeled " + label);
}

int CombPolytope::facet_index(const std::string& label) const {
  for (int i = 0; i < num_facets(); ++i)
    if (facet_labels[i] == label) return i;
  throw NotAFacet("no facet labeled " + label);
}

void CombPolytope::check_structure() const {
  const int m = num_facets(), n = num_vertices();
  if (dim < 0) throw Error("negative dimension");
  if (static_cast<int>(support.size()) != m) throw Error("support row count mismatch");
  for (const auto& row : support)
    if (static_cast<int>(row.size()) != n) throw Error("support column count mismatch");
  if (std::set<std::string>(vertex_labels.begin(), vertex_labels.end()).size() !=
      vertex_labels.size())
    throw Error("duplicate vertex labels");
  if (std::set<std::string>(facet_labels.begin(), facet_labels.end()).size() !=
      facet_labels.size())
    throw Error("duplicate facet labels");
  if (is_point()) return;
  if (n == 0) throw Error("polytope without vertices");
  for (int f = 0; f < m; ++f) {
    bool any = false;
    for (int v = 0; v < n; ++v) any = any || support[f][v];
    if (!any) throw Error("zero support row (facet contains every vertex): " +
                          facet_labels[f]);
  }
  for (int v = 0; v < n; ++v) {
    bool any = false;
    for (int f = 0; f < m; ++f) any = any || support[f][v];
    if (!any)
      throw Error("zero support column (vertex on every facet): " + vertex_labels[v]);
  }
  for (int f = 0; f < m; ++f)
    for (int g = f + 1; g < m; ++g)
      if (support[f] == support[g])
        throw Error("duplicate facet rows: " + facet_labels[f] + " and " +
                    facet_labels[g]);
}

CombPolytope point_polytope() {
  CombPolytope P;
  P.dim = 0;
  P.vertex_labels = {"v0"};
  return P;
}

CombPolytope simplex(int d) {
  if (d < 0) throw Error("simplex dimension must be nonnegative");
  if (d == 0) return point_polytope();
  CombPolytope P;
  P.dim = d;
  for (int i = 0; i <= d; ++i) {
    P.vertex_labels.push_back("v" + std::to_string(i));
    P.facet_labels.push_back("f" + std::to_string(i));
    std::vector<std::uint8_t> row(d + 1, 0);
    row[i] = 1;  // facet f_i misses exactly v_i
    P.support.push_back(std::move(row));
  }
  P.check_structure();
  return P;
}

CombPolytope dual(const CombPolytope& P) {
  if (P.is_point()) return P;
  CombPolytope D;
  D.dim = P.dim;
  D.vertex_labels = P.facet_labels;
  D.facet_labels = P.vertex_labels;
  D.support.assign(P.num_vertices(), std::vector<std::uint8_t>(P.num_facets(), 0));
  for (int f = 0; f < P.num_facets(); ++f)
    for (int v = 0; v < P.num_vertices(); ++v) D.support[v][f] = P.support[f][v];
  D.check_structure();
  return D;
}

namespace {

std::string side_label(const char* side, const std::string& s) {
  return std::string(side) + ":" + s;
}

}  // namespace

CombPolytope join(const CombPolytope& P, const CombPolytope& Q) {
  CombPolytope J;
  J.dim = P.dim + Q.dim + 1;
  const int nP = P.num_vertices(), nQ = Q.num_vertices();
  for (const auto& v : P.vertex_labels) J.vertex_labels.push_back(side_label("L", v));
  for (const auto& w : Q.vertex_labels) J.vertex_labels.push_back(side_label("R", w));
  // P-side rows. A point operand has no facets; its empty face shows up as
  // the base row carrying all of the other operand.
  if (P.num_facets() > 0) {
    for (int f = 0; f < P.num_facets(); ++f) {
      std::vector<std::uint8_t> row(nP + nQ, 0);
      for (int v = 0; v < nP; ++v) row[v] = P.support[f][v];
      J.facet_labels.push_back(side_label("L", P.facet_labels[f]));
      J.support.push_back(std::move(row));
    }
  } else {
    std::vector<std::uint8_t> row(nP + nQ, 0);
    row[0] = 1;
    J.facet_labels.push_back("L:base");
    J.support.push_back(std::move(row));
  }
  if (Q.num_facets() > 0) {
    for (int g = 0; g < Q.num_facets(); ++g) {
      std::vector<std::uint8_t> row(nP + nQ, 0);
      for (int w = 0; w < nQ; ++w) row[nP + w] = Q.support[g][w];
      J.facet_labels.push_back(side_label("R", Q.facet_labels[g]));
      J.support.push_back(std::move(row));
    }
  } else {
    std::vector<std::uint8_t> row(nP + nQ, 0);
    row[nP] = 1;
    J.facet_labels.push_back("R:base");
    J.support.push_back(std::move(row));
  }
  J.check_structure();
  return J;
}

CombPolytope hypercube(int d) {
  if (d < 0) throw Error("hypercube dimension must be nonnegative");
  if (d == 0) return point_polytope();
  // Built directly rather than through order_polytope to avoid a dependency
  // cycle; same facet order convention (all minima first, then maxima).
  CombPolytope C;
  C.dim = d;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    std::string lab = "{";
    bool first = true;
    for (int i = 0; i < d; ++i)
      if ((mask >> i) & 1u) {
        if (!first) lab += ",";
        lab += std::to_string(i + 1);
        first = false;
      }
    lab += "}";
    C.vertex_labels.push_back(lab);
  }
  for (int i = 0; i < d; ++i) {
    std::vector<std::uint8_t> row(1u << d, 0);
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) row[mask] = (mask >> i) & 1u;
    C.facet_labels.push_back("min:" + std::to_string(i + 1));
    C.support.push_back(std::move(row));
  }
  for (int i = 0; i < d; ++i) {
    std::vector<std::uint8_t> row(1u << d, 0);
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask)
      row[mask] = ((mask >> i) & 1u) ^ 1u;
    C.facet_labels.push_back("max:" + std::to_string(i + 1));
    C.support.push_back(std::move(row));
  }
  C.check_structure();
  return C;
}

CombPolytope product(const CombPolytope& P, const CombPolytope& Q) {
  CombPolytope R;
  R.dim = P.dim + Q.dim;
  const int nP = P.num_vertices(), nQ = Q.num_vertices();
  for (int v = 0; v < nP; ++v)
    for (int w = 0; w < nQ; ++w)
      R.vertex_labels.push_back(side_label("L", P.vertex_labels[v]) + "|" +
                                side_label("R", Q.vertex_labels[w]));
  for (int f = 0; f < P.num_facets(); ++f) {
    std::vector<std::uint8_t> row(nP * nQ, 0);
    for (int v = 0; v < nP; ++v)
      for (int w = 0; w < nQ; ++w) row[v * nQ + w] = P.support[f][v];
    R.facet_labels.push_back(side_label("L", P.facet_labels[f]));
    R.support.push_back(std::move(row));
  }
  for (int g = 0; g < Q.num_facets(); ++g) {
    std::vector<std::uint8_t> row(nP * nQ, 0);
    for (int v = 0; v < nP; ++v)
      for (int w = 0; w < nQ; ++w) row[v * nQ + w] = Q.support[g][w];
    R.facet_labels.push_back(side_label("R", Q.facet_labels[g]));
    R.support.push_back(std::move(row));
  }
  R.check_structure();
  return R;
}

CombPolytope vertex_sum(const CombPolytope& P, const std::string& v,
                        const CombPolytope& Q, const std::string& w) {
  const int iv = P.vertex_index(v);
  const int iw = Q.vertex_index(w);
  if (P.is_point()) return Q;  // summing with a point is the identity
  if (Q.is_point()) return P;
  CombPolytope S;
  S.dim = P.dim + Q.dim;
  std::vector<int> pv, qw;  // surviving vertex columns
  for (int x = 0; x < P.num_vertices(); ++x)
    if (x != iv) {
      pv.push_back(x);
      S.vertex_labels.push_back(side_label("L", P.vertex_labels[x]));
    }
  S.vertex_labels.push_back("p");
  const int pcol = static_cast<int>(pv.size());
  for (int y = 0; y < Q.num_vertices(); ++y)
    if (y != iw) {
      qw.push_back(y);
      S.vertex_labels.push_back(side_label("R", Q.vertex_labels[y]));
    }
  const int ncols = static_cast<int>(S.vertex_labels.size());
  std::vector<int> fP_in, fP_out, fQ_in, fQ_out;
  for (int f = 0; f < P.num_facets(); ++f)
    (P.support[f][iv] ? fP_out : fP_in).push_back(f);
  for (int g = 0; g < Q.num_facets(); ++g)
    (Q.support[g][iw] ? fQ_out : fQ_in).push_back(g);
  for (int f : fP_in) {
    std::vector<std::uint8_t> row(ncols, 0);
    for (std::size_t i = 0; i < pv.size(); ++i) row[i] = P.support[f][pv[i]];
    S.facet_labels.push_back(side_label("L", P.facet_labels[f]));
    S.support.push_back(std::move(row));
  }
  for (int g : fQ_in) {
    std::vector<std::uint8_t> row(ncols, 0);
    for (std::size_t j = 0; j < qw.size(); ++j)
      row[pcol + 1 + j] = Q.support[g][qw[j]];
    S.facet_labels.push_back(side_label("R", Q.facet_labels[g]));
    S.support.push_back(std::move(row));
  }
  for (int f : fP_out) {
    for (int g : fQ_out) {
      std::vector<std::uint8_t> row(ncols, 0);
      for (std::size_t i = 0; i < pv.size(); ++i) row[i] = P.support[f][pv[i]];
      row[pcol] = 1;
      for (std::size_t j = 0; j < qw.size(); ++j)
        row[pcol + 1 + j] = Q.support[g][qw[j]];
      S.facet_labels.push_back(side_label("L", P.facet_labels[f]) + "|" +
                               side_label("R", Q.facet_labels[g]));
      S.support.push_back(std::move(row));
    }
  }
  S.check_structure();
  return S;
}

VertexSplitResult vertex_split(const CombPolytope& P, const std::string& p) {
  const int ip = P.vertex_index(p);
  VertexSplitResult R;
  CombPolytope& S = R.poly;
  S.dim = P.dim + 1;
  if (P.is_point()) {
    S.vertex_labels = {p + "_bar", p + "_hat"};
    S.facet_labels = {"cap_bar", "cap_hat"};
    S.support = {{1, 0}, {0, 1}};
    R.data.bar_vertex = 0;
    R.data.hat_vertex = 1;
    S.check_structure();
    return R;
  }
  std::vector<int> keep;
  for (int x = 0; x < P.num_vertices(); ++x)
    if (x != ip) {
      keep.push_back(x);
      S.vertex_labels.push_back(P.vertex_labels[x]);
      R.data.old_vertices.push_back(static_cast<int>(S.vertex_labels.size()) - 1);
    }
  const int bar_col = static_cast<int>(keep.size());
  const int hat_col = bar_col + 1;
  S.vertex_labels.push_back(p + "_bar");
  S.vertex_labels.push_back(p + "_hat");
  R.data.bar_vertex = bar_col;
  R.data.hat_vertex = hat_col;
  const int ncols = hat_col + 1;
  std::vector<int> f_in, f_out;
  for (int f = 0; f < P.num_facets(); ++f)
    (P.support[f][ip] ? f_out : f_in).push_back(f);
  for (int f : f_in) {
    std::vector<std::uint8_t> row(ncols, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) row[i] = P.support[f][keep[i]];
    S.facet_labels.push_back(P.facet_labels[f]);
    S.support.push_back(std::move(row));
    R.data.kept_facets.push_back(static_cast<int>(S.support.size()) - 1);
  }
  std::vector<int> bar_rows;
  for (int f : f_out) {
    std::vector<std::uint8_t> row(ncols, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) row[i] = P.support[f][keep[i]];
    row[bar_col] = 1;
    S.facet_labels.push_back(P.facet_labels[f] + "_bar");
    S.support.push_back(std::move(row));
    bar_rows.push_back(static_cast<int>(S.support.size()) - 1);
  }
  for (std::size_t k = 0; k < f_out.size(); ++k) {
    int f = f_out[k];
    std::vector<std::uint8_t> row(ncols, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) row[i] = P.support[f][keep[i]];
    row[hat_col] = 1;
    S.facet_labels.push_back(P.facet_labels[f] + "_hat");
    S.support.push_back(std::move(row));
    R.data.pairs.push_back({bar_rows[k], static_cast<int>(S.support.size()) - 1});
  }
  S.check_structure();
  return R;
}

CombPolytope facet_wedge(const CombPolytope& P, const std::string& F) {
  P.facet_index(F);  // NotAFacet on bad label (also rejects the point)
  return dual(vertex_split(dual(P), F).poly);
}

CombPolytope facet_product(const CombPolytope& P, const std::string& F1,
                           const CombPolytope& Q, const std::string& F2) {
  P.facet_index(F1);
  Q.facet_index(F2);
  CombPolytope R = dual(vertex_sum(dual(P), F1, dual(Q), F2));
  // The sum point is the merged facet; give it a readable name.
  for (auto& lab : R.facet_labels)
    if (lab == "p") lab = side_label("L", F1) + "|" + side_label("R", F2);
  return R;
}

CombPolytope facet_wedge_direct(const CombPolytope& P, const std::string& F) {
  const int iF = P.facet_index(F);
  CombPolytope W;
  W.dim = P.dim + 1;
  std::vector<int> on, off;
  for (int v = 0; v < P.num_vertices(); ++v)
    (P.support[iF][v] ? off : on).push_back(v);
  for (int v : on) W.vertex_labels.push_back(P.vertex_labels[v]);
  for (int v : off) W.vertex_labels.push_back(P.vertex_labels[v] + "_bar");
  for (int v : off) W.vertex_labels.push_back(P.vertex_labels[v] + "_hat");
  const int ncols = static_cast<int>(W.vertex_labels.size());
  const int non = static_cast<int>(on.size()), noff = static_cast<int>(off.size());
  for (int f = 0; f < P.num_facets(); ++f) {
    if (f == iF) continue;
    std::vector<std::uint8_t> row(ncols, 0);
    for (int i = 0; i < non; ++i) row[i] = P.support[f][on[i]];
    for (int i = 0; i < noff; ++i) {
      row[non + i] = P.support[f][off[i]];
      row[non + noff + i] = P.support[f][off[i]];
    }
    W.facet_labels.push_back(P.facet_labels[f]);
    W.support.push_back(std::move(row));
  }
  {
    std::vector<std::uint8_t> row(ncols, 0);
    for (int i = 0; i < noff; ++i) row[non + i] = 1;
    W.facet_labels.push_back(F + "_bar");
    W.support.push_back(std::move(row));
  }
  {
    std::vector<std::uint8_t> row(ncols, 0);
    for (int i = 0; i < noff; ++i) row[non + noff + i] = 1;
    W.facet_labels.push_back(F + "_hat");
    W.support.push_back(std::move(row));
  }
  W.check_structure();
  return W;
}

CombPolytope facet_product_direct(const CombPolytope& P, const std::string& F1,
                                  const CombPolytope& Q, const std::string& F2) {
  const int i1 = P.facet_index(F1);
  const int i2 = Q.facet_index(F2);
  CombPolytope R;
  R.dim = P.dim + Q.dim;
  std::vector<int> onP, offP, onQ, offQ;
  for (int v = 0; v < P.num_vertices(); ++v)
    (P.support[i1][v] ? offP : onP).push_back(v);
  for (int w = 0; w < Q.num_vertices(); ++w)
    (Q.support[i2][w] ? offQ : onQ).push_back(w);
  for (int v : onP) R.vertex_labels.push_back(side_label("L", P.vertex_labels[v]));
  for (int w : onQ) R.vertex_labels.push_back(side_label("R", Q.vertex_labels[w]));
  for (int v : offP)
    for (int w : offQ)
      R.vertex_labels.push_back(side_label("L", P.vertex_labels[v]) + "|" +
                                side_label("R", Q.vertex_labels[w]));
  const int ncols = static_cast<int>(R.vertex_labels.size());
  const int nOnP = static_cast<int>(onP.size()), nOnQ = static_cast<int>(onQ.size());
  const int nOffQ = static_cast<int>(offQ.size());
  for (int f = 0; f < P.num_facets(); ++f) {
    if (f == i1) continue;
    std::vector<std::uint8_t> row(ncols, 0);
    for (int i = 0; i < nOnP; ++i) row[i] = P.support[f][onP[i]];
    for (std::size_t a = 0; a < offP.size(); ++a)
      for (int b = 0; b < nOffQ; ++b)
        row[nOnP + nOnQ + static_cast<int>(a) * nOffQ + b] = P.support[f][offP[a]];
    R.facet_labels.push_back(side_label("L", P.facet_labels[f]));
    R.support.push_back(std::move(row));
  }
  {
    // merged facet: off exactly the paired vertices
    std::vector<std::uint8_t> row(ncols, 0);
    for (int k = nOnP + nOnQ; k < ncols; ++k) row[k] = 1;
    R.facet_labels.push_back(side_label("L", F1) + "|" + side_label("R", F2));
    R.support.push_back(std::move(row));
  }
  for (int g = 0; g < Q.num_facets(); ++g) {
    if (g == i2) continue;
    std::vector<std::uint8_t> row(ncols, 0);
    for (int j = 0; j < nOnQ; ++j) row[nOnP + j] = Q.support[g][onQ[j]];
    for (std::size_t a = 0; a < offP.size(); ++a)
      for (int b = 0; b < nOffQ; ++b)
        row[nOnP + nOnQ + static_cast<int>(a) * nOffQ + b] = Q.support[g][offQ[b]];
    R.facet_labels.push_back(side_label("R", Q.facet_labels[g]));
    R.support.push_back(std::move(row));
  }
  R.check_structure();
  return R;
}

CombPolytope polytope_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CombPolytope P;
  P.dim = j.at("dim").get<int>();
  P.vertex_labels = j.at("vertices").get<std::vector<std::string>>();
  P.facet_labels = j.at("facets").get<std::vector<std::string>>();
  for (const auto& row : j.at("support")) {
    std::vector<std::uint8_t> r;
    for (const auto& x : row) r.push_back(x.get<int>() ? 1 : 0);
    P.support.push_back(std::move(r));
  }
  P.check_structure();
  return P;
}

std::string polytope_to_json(const CombPolytope& P) {
  nlohmann::json j;
  j["dim"] = P.dim;
  j["vertices"] = P.vertex_labels;
  j["facets"] = P.facet_labels;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : P.support) {
    nlohmann::json r = nlohmann::json::array();
    for (auto x : row) r.push_back(static_cast<int>(x));
    rows.push_back(std::move(r));
  }
  j["support"] = rows;
  return j.dump();
}

}  // namespace ordslack
