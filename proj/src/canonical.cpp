#include "ordslack/canonical.hpp"

#include <algorithm>
#include <map>

namespace ordslack {

namespace {

// Nodes 0..m-1 are facets, m..m+n-1 are vertices.
struct BiGraph {
  int m = 0, n = 0;
  std::vector<std::vector<int>> adj;

  static BiGraph from(const CombPolytope& P) {
    BiGraph G;
    G.m = P.num_facets();
    G.n = P.num_vertices();
    G.adj.assign(G.m + G.n, {});
    for (int f = 0; f < G.m; ++f)
      for (int v = 0; v < G.n; ++v)
        if (P.support[f][v]) {
          G.adj[f].push_back(G.m + v);
          G.adj[G.m + v].push_back(f);
        }
    return G;
  }

  int size() const { return m + n; }
};

using Signature = std::pair<int, std::vector<int>>;

void node_signatures(const BiGraph& G, const std::vector<int>& col,
                     std::vector<Signature>& out) {
  out.resize(G.size());
  for (int u = 0; u < G.size(); ++u) {
    std::vector<int> nb;
    nb.reserve(G.adj[u].size());
    for (int v : G.adj[u]) nb.push_back(col[v]);
    std::sort(nb.begin(), nb.end());
    out[u] = {col[u], std::move(nb)};
  }
}

int color_count(const std::vector<int>& col) {
  return col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
}

// One joint refinement round over both graphs; new colors come from the
// sorted order of signatures so they are comparable across the pair.
// Returns false as soon as the color histograms diverge.
bool refine_pair(const BiGraph& A, const BiGraph& B, std::vector<int>& colA,
                 std::vector<int>& colB) {
  for (;;) {
    std::vector<Signature> sa, sb;
    node_signatures(A, colA, sa);
    node_signatures(B, colB, sb);
    std::map<Signature, int> ids;
    for (const auto& s : sa) ids.emplace(s, 0);
    for (const auto& s : sb) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    int before = color_count(colA);
    std::vector<int> histA(next, 0), histB(next, 0);
    for (int u = 0; u < A.size(); ++u) {
      colA[u] = ids[sa[u]];
      ++histA[colA[u]];
    }
    for (int u = 0; u < B.size(); ++u) {
      colB[u] = ids[sb[u]];
      ++histB[colB[u]];
    }
    if (histA != histB) return false;
    if (next == before) return true;
  }
}

void refine_single(const BiGraph& G, std::vector<int>& col) {
  for (;;) {
    std::vector<Signature> sig;
    node_signatures(G, col, sig);
    std::map<Signature, int> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    int before = color_count(col);
    for (int u = 0; u < G.size(); ++u) col[u] = ids[sig[u]];
    if (next == before) return;
  }
}

bool iso_search(const BiGraph& A, const BiGraph& B, std::vector<int> colA,
                std::vector<int> colB, Iso& out) {
  if (!refine_pair(A, B, colA, colB)) return false;
  const int ncol = color_count(colA);
  // first color class with more than one node
  int target = -1;
  std::vector<int> class_size(ncol, 0);
  for (int c : colA) ++class_size[c];
  for (int c = 0; c < ncol; ++c)
    if (class_size[c] > 1) {
      target = c;
      break;
    }
  if (target < 0) {
    // discrete: colors give the bijection; verify every edge
    std::vector<int> a_of_color(ncol, -1), b_of_color(ncol, -1);
    for (int u = 0; u < A.size(); ++u) a_of_color[colA[u]] = u;
    for (int u = 0; u < B.size(); ++u) b_of_color[colB[u]] = u;
    std::vector<int> node_map(A.size());
    for (int c = 0; c < ncol; ++c) {
      if (a_of_color[c] < 0) continue;
      node_map[a_of_color[c]] = b_of_color[c];
    }
    for (int u = 0; u < A.size(); ++u) {
      if ((u < A.m) != (node_map[u] < B.m)) return false;
      std::vector<int> mapped;
      for (int v : A.adj[u]) mapped.push_back(node_map[v]);
      std::sort(mapped.begin(), mapped.end());
      std::vector<int> there = B.adj[node_map[u]];
      std::sort(there.begin(), there.end());
      if (mapped != there) return false;
    }
    out.facet_map.assign(A.m, -1);
    out.vertex_map.assign(A.n, -1);
    for (int f = 0; f < A.m; ++f) out.facet_map[f] = node_map[f];
    for (int v = 0; v < A.n; ++v) out.vertex_map[v] = node_map[A.m + v] - B.m;
    return true;
  }
  int a = -1;
  for (int u = 0; u < A.size(); ++u)
    if (colA[u] == target) {
      a = u;
      break;
    }
  for (int b = 0; b < B.size(); ++b) {
    if (colB[b] != target) continue;
    std::vector<int> ca = colA, cb = colB;
    ca[a] = ncol;
    cb[b] = ncol;
    if (iso_search(A, B, std::move(ca), std::move(cb), out)) return true;
  }
  return false;
}

}  // namespace

std::optional<Iso> find_isomorphism(const CombPolytope& A, const CombPolytope& B) {
  if (A.dim != B.dim || A.num_facets() != B.num_facets() ||
      A.num_vertices() != B.num_vertices())
    return std::nullopt;
  BiGraph GA = BiGraph::from(A), GB = BiGraph::from(B);
  std::vector<int> colA(GA.size()), colB(GB.size());
  for (int u = 0; u < GA.size(); ++u) colA[u] = u < GA.m ? 0 : 1;
  for (int u = 0; u < GB.size(); ++u) colB[u] = u < GB.m ? 0 : 1;
  Iso iso;
  if (iso_search(GA, GB, std::move(colA), std::move(colB), iso)) return iso;
  return std::nullopt;
}

bool combinatorially_equivalent(const CombPolytope& A, const CombPolytope& B) {
  return find_isomorphism(A, B).has_value();
}

namespace {

struct CanonState {
  const BiGraph* G;
  std::string best;
  bool have_best = false;
  long nodes = 0;
  int dim = 0;

  std::string encode(const std::vector<int>& col) const {
    // facets and vertices separately sorted by color give the permutation
    std::vector<int> facets, verts;
    for (int f = 0; f < G->m; ++f) facets.push_back(f);
    for (int v = 0; v < G->n; ++v) verts.push_back(G->m + v);
    std::sort(facets.begin(), facets.end(), [&](int a, int b) { return col[a] < col[b]; });
    std::sort(verts.begin(), verts.end(), [&](int a, int b) { return col[a] < col[b]; });
    std::vector<int> vpos(G->size(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) vpos[verts[i]] = i;
    std::string bits(static_cast<std::size_t>(G->m) * G->n, '0');
    for (int i = 0; i < G->m; ++i)
      for (int v : G->adj[facets[i]]) bits[i * G->n + vpos[v]] = '1';
    std::string head = std::to_string(dim) + ":" + std::to_string(G->m) + ":" +
                       std::to_string(G->n) + ":";
    // pack bit string into hex
    std::string hex;
    for (std::size_t i = 0; i < bits.size(); i += 4) {
      int nib = 0;
      for (std::size_t k = 0; k < 4 && i + k < bits.size(); ++k)
        nib = (nib << 1) | (bits[i + k] == '1');
      if (bits.size() - i < 4) nib <<= 4 - (bits.size() - i);
      hex += "0123456789abcdef"[nib];
    }
    return head + hex;
  }

  void search(std::vector<int> col) {
    if (++nodes > 2000000) throw Error("canonical labeling budget exceeded");
    refine_single(*G, col);
    const int ncol = color_count(col);
    std::vector<int> class_size(ncol, 0);
    for (int c : col) ++class_size[c];
    int target = -1;
    for (int c = 0; c < ncol; ++c)
      if (class_size[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      std::string enc = encode(col);
      if (!have_best || enc < best) {
        best = std::move(enc);
        have_best = true;
      }
      return;
    }
    for (int u = 0; u < G->size(); ++u) {
      if (col[u] != target) continue;
      std::vector<int> c2 = col;
      c2[u] = ncol;
      search(std::move(c2));
    }
  }
};

}  // namespace

std::string canonical_form(const CombPolytope& P) {
  BiGraph G = BiGraph::from(P);
  CanonState st;
  st.G = &G;
  st.dim = P.dim;
  std::vector<int> col(G.size());
  for (int u = 0; u < G.size(); ++u) col[u] = u < G.m ? 0 : 1;
  st.search(std::move(col));
  return st.best;
}

}  // namespace ordslack
