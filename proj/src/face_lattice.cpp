#include "ordslack/face_lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ordslack {

namespace {

constexpr std::size_t kFaceCap = 50000;

std::vector<int> facet_vertex_set(const CombPolytope& P, int f) {
  std::vector<int> out;
  for (int v = 0; v < P.num_vertices(); ++v)
    if (!P.support[f][v]) out.push_back(v);
  return out;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

int FaceLattice::face_index(const std::vector<int>& verts) const {
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].vertices == verts) return static_cast<int>(i);
  return -1;
}

FaceLattice face_lattice(const CombPolytope& P) {
  std::set<std::vector<int>> closed;
  std::vector<int> all(P.num_vertices());
  for (int v = 0; v < P.num_vertices(); ++v) all[v] = v;
  closed.insert(all);
  closed.insert({});
  std::vector<std::vector<int>> facet_sets;
  for (int f = 0; f < P.num_facets(); ++f) {
    facet_sets.push_back(facet_vertex_set(P, f));
    closed.insert(facet_sets.back());
  }
  std::vector<std::vector<int>> work(closed.begin(), closed.end());
  while (!work.empty()) {
    std::vector<int> cur = std::move(work.back());
    work.pop_back();
    for (const auto& fs : facet_sets) {
      std::vector<int> inter = intersect_sorted(cur, fs);
      if (closed.insert(inter).second) {
        if (closed.size() > kFaceCap)
          throw CapExceeded("face lattice exceeds face cap", closed.size());
        work.push_back(std::move(inter));
      }
    }
  }
  FaceLattice L;
  for (const auto& s : closed) L.faces.push_back({s, -1});
  std::sort(L.faces.begin(), L.faces.end(), [](const auto& a, const auto& b) {
    if (a.vertices.size() != b.vertices.size())
      return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  const int nf = static_cast<int>(L.faces.size());
  // covers: strict inclusion with nothing in between
  for (int i = 0; i < nf; ++i) {
    for (int j = 0; j < nf; ++j) {
      if (L.faces[i].vertices.size() >= L.faces[j].vertices.size()) continue;
      if (!subset_sorted(L.faces[i].vertices, L.faces[j].vertices)) continue;
      bool cover = true;
      for (int k = 0; k < nf && cover; ++k) {
        if (k == i || k == j) continue;
        if (L.faces[k].vertices.size() <= L.faces[i].vertices.size() ||
            L.faces[k].vertices.size() >= L.faces[j].vertices.size())
          continue;
        if (subset_sorted(L.faces[i].vertices, L.faces[k].vertices) &&
            subset_sorted(L.faces[k].vertices, L.faces[j].vertices))
          cover = false;
      }
      if (cover) L.hasse.emplace_back(i, j);
    }
  }
  // rank by longest chain from the empty face (faces are sorted by size, so
  // a single pass over hasse edges in order works)
  for (auto& f : L.faces) f.rank = f.vertices.empty() ? -1 : 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lo, hi] : L.hasse) {
      if (L.faces[hi].rank < L.faces[lo].rank + 1) {
        L.faces[hi].rank = L.faces[lo].rank + 1;
        changed = true;
      }
    }
  }
  return L;
}

Flag find_flag(const CombPolytope& P) {
  if (P.num_facets() == 0) throw FlagNotFound("polytope has no facets");
  const int d = P.dim;
  FaceLattice L = face_lattice(P);
  // Build a maximal chain by descending from the full polytope one cover at
  // a time; for a genuine polytope the lattice is graded, so we land on the
  // empty face after exactly d+1 steps.
  std::vector<std::vector<int>> covered_by(L.faces.size());
  for (const auto& [lo, hi] : L.hasse) covered_by[hi].push_back(lo);
  int top = -1;
  for (std::size_t i = 0; i < L.faces.size(); ++i)
    if (static_cast<int>(L.faces[i].vertices.size()) == P.num_vertices())
      top = static_cast<int>(i);
  std::vector<std::vector<int>> chain;  // g_d down to g_{-1}
  int cur = top;
  chain.push_back(L.faces[cur].vertices);
  while (!L.faces[cur].vertices.empty()) {
    if (covered_by[cur].empty()) throw FlagNotFound("face lattice is not graded");
    cur = covered_by[cur].front();
    chain.push_back(L.faces[cur].vertices);
  }
  if (static_cast<int>(chain.size()) != d + 2)
    throw FlagNotFound("maximal chain length does not match dimension");
  std::reverse(chain.begin(), chain.end());  // chain[k+1] = g_k, chain[0] = empty
  std::vector<std::vector<int>> facet_sets;
  for (int f = 0; f < P.num_facets(); ++f) facet_sets.push_back(facet_vertex_set(P, f));
  Flag flag;
  flag.facets.assign(d + 1, -1);
  flag.vertices.assign(d + 1, -1);
  std::vector<bool> used(P.num_facets(), false);
  // choose G_{k+1} with g_{k+1} ∩ verts(G_{k+1}) = g_k, from the top down
  for (int k = d - 1; k >= -1; --k) {
    const auto& upper = chain[k + 2];  // g_{k+1}
    const auto& lower = chain[k + 1];  // g_k
    int chosen = -1;
    for (int f = 0; f < P.num_facets() && chosen < 0; ++f) {
      if (used[f]) continue;
      if (intersect_sorted(upper, facet_sets[f]) == lower) chosen = f;
    }
    if (chosen < 0) throw FlagNotFound("no facet realizes a chain step");
    used[chosen] = true;
    flag.facets[k + 1] = chosen;
  }
  for (int k = 0; k <= d; ++k) {
    const auto& gk = chain[k + 1];
    const auto& gk1 = chain[k];
    int w = -1;
    for (int v : gk) {
      if (!std::binary_search(gk1.begin(), gk1.end(), v)) {
        w = v;
        break;
      }
    }
    if (w < 0) throw FlagNotFound("chain step has no new vertex");
    flag.vertices[k] = w;
  }
  // sanity: upper triangular with ones on the diagonal
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) {
      std::uint8_t s = P.support[flag.facets[i]][flag.vertices[j]];
      if (i > j && s) throw FlagNotFound("flag submatrix is not upper triangular");
      if (i == j && !s) throw FlagNotFound("flag submatrix has a zero diagonal entry");
    }
  return flag;
}

std::string face_lattice_to_dot(const CombPolytope& P, const FaceLattice& L) {
  std::ostringstream os;
  os << "digraph face_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < L.faces.size(); ++i) {
    os << "  f" << i << " [label=\"{";
    for (std::size_t k = 0; k < L.faces[i].vertices.size(); ++k) {
      if (k) os << ",";
      os << P.vertex_labels[L.faces[i].vertices[k]];
    }
    os << "}\"];\n";
  }
  for (const auto& [lo, hi] : L.hasse) os << "  f" << lo << " -> f" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ordslack
