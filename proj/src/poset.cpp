#include "ordslack/poset.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ordslack {

namespace {

std::vector<std::pair<int, int>> covers_from_closure(
    const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool is_cover = true;
      for (int c = 0; c < n && is_cover; ++c) {
        if (c != a && c != b && leq[a][c] && leq[c][b]) is_cover = false;
      }
      if (is_cover) covers.emplace_back(a, b);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

}  // namespace

Poset Poset::from_closure(std::vector<std::string> elements,
                          std::vector<std::vector<bool>> leq) {
  Poset P;
  P.elements_ = std::move(elements);
  P.leq_ = std::move(leq);
  P.covers_ = covers_from_closure(P.leq_);
  return P;
}

Poset Poset::build(std::vector<std::string> elements,
                   const std::vector<std::pair<std::string, std::string>>& relations) {
  const int n = static_cast<int>(elements.size());
  if (n > 64) throw Error("posets are capped at 64 elements");
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(elements[i], i).second)
      throw LabelCollision("duplicate element label: " + elements[i]);
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [a, b] : relations) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw UnknownLabel("relation references unknown label: " + a);
    if (ib == index.end()) throw UnknownLabel("relation references unknown label: " + b);
    leq[ia->second][ib->second] = true;
  }
  // Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i][j] && leq[j][i])
        throw CycleError("relation closure is not antisymmetric: " + elements[i] +
                         " and " + elements[j] + " are in a cycle");
  return from_closure(std::move(elements), std::move(leq));
}

int Poset::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[i] == label) return i;
  throw UnknownLabel("unknown element label: " + label);
}

bool Poset::has_label(const std::string& label) const {
  for (const auto& e : elements_)
    if (e == label) return true;
  return false;
}

bool Poset::is_maximal(int i) const {
  for (int j = 0; j < size(); ++j)
    if (j != i && leq_[i][j]) return false;
  return true;
}

bool Poset::is_minimal(int i) const {
  for (int j = 0; j < size(); ++j)
    if (j != i && leq_[j][i]) return false;
  return true;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (is_maximal(i)) out.push_back(i);
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (is_minimal(i)) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> Poset::hasse_components() const {
  const int n = size();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = ncomp;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const auto& [a, b] : covers_) {
        int other = -1;
        if (a == u) other = b;
        if (b == u) other = a;
        if (other >= 0 && comp[other] == -1) {
          comp[other] = ncomp;
          q.push(other);
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> out(ncomp);
  for (int i = 0; i < n; ++i) out[comp[i]].push_back(i);
  return out;
}

Poset Poset::restrict(const std::vector<int>& keep) const {
  std::vector<std::string> els;
  els.reserve(keep.size());
  for (int i : keep) els.push_back(elements_[i]);
  std::vector<std::vector<bool>> leq(keep.size(), std::vector<bool>(keep.size(), false));
  for (std::size_t x = 0; x < keep.size(); ++x)
    for (std::size_t y = 0; y < keep.size(); ++y) leq[x][y] = leq_[keep[x]][keep[y]];
  return from_closure(std::move(els), std::move(leq));
}

std::vector<Filter> enumerate_filters(const Poset& P) {
  const int n = P.size();
  std::vector<Filter> out;
  if (n <= 20) {
    // Plain subset filtering: a subset is a filter iff it is closed upward
    // across every cover.
    const auto& covers = P.covers();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      bool ok = true;
      for (const auto& [a, b] : covers) {
        if (((mask >> a) & 1u) && !((mask >> b) & 1u)) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(Filter{mask});
    }
    return out;  // masks were visited in ascending order
  }
  // DFS over include/exclude decisions with up/down propagation; avoids
  // walking all 2^n subsets when n is large.
  std::vector<std::vector<int>> up(n), down(n);
  for (const auto& [a, b] : P.covers()) {
    up[a].push_back(b);
    down[b].push_back(a);
  }
  // state: 0 undecided, 1 in, 2 out
  std::vector<int> state(n, 0);
  std::vector<int> trail;
  auto assign = [&](int v, int s) -> bool {
    std::vector<int> stack{v};
    if (state[v] != 0) return state[v] == s;
    state[v] = s;
    trail.push_back(v);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      const auto& nbrs = (state[u] == 1) ? up[u] : down[u];
      for (int w : nbrs) {
        if (state[w] == state[u]) continue;
        if (state[w] != 0) return false;
        state[w] = state[u];
        trail.push_back(w);
        stack.push_back(w);
      }
    }
    return true;
  };
  std::function<void(int)> rec = [&](int v) {
    while (v < n && state[v] != 0) ++v;
    if (v == n) {
      std::uint64_t mask = 0;
      for (int i = 0; i < n; ++i)
        if (state[i] == 1) mask |= (1ull << i);
      out.push_back(Filter{mask});
      return;
    }
    for (int s : {2, 1}) {
      std::size_t mark = trail.size();
      if (assign(v, s)) rec(v + 1);
      while (trail.size() > mark) {
        state[trail.back()] = 0;
        trail.pop_back();
      }
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string filter_label(const Poset& P, Filter f) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < P.size(); ++i) {
    if (!f.contains(i)) continue;
    if (!first) s += ",";
    s += P.label(i);
    first = false;
  }
  s += "}";
  return s;
}

namespace {

// Maximum-antichain size of the subposet induced on `allowed` via Dilworth:
// width = |allowed| - maximum matching in the strict-comparability bipartite
// graph.
int poset_width(const Poset& P, const std::vector<int>& allowed) {
  const int m = static_cast<int>(allowed.size());
  std::vector<std::vector<int>> adj(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (P.less(allowed[x], allowed[y])) adj[x].push_back(y);
  std::vector<int> match_right(m, -1);
  std::vector<bool> seen;
  std::function<bool(int)> try_kuhn = [&](int x) -> bool {
    for (int y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      if (match_right[y] == -1 || try_kuhn(match_right[y])) {
        match_right[y] = x;
        return true;
      }
    }
    return false;
  };
  int matching = 0;
  for (int x = 0; x < m; ++x) {
    seen.assign(m, false);
    if (try_kuhn(x)) ++matching;
  }
  return m - matching;
}

}  // namespace

std::vector<int> max_antichain(const Poset& P) {
  const int n = P.size();
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  const int width = poset_width(P, all);
  std::vector<int> chosen;
  for (int e = 0; e < n && static_cast<int>(chosen.size()) < width; ++e) {
    bool compatible = true;
    for (int c : chosen)
      if (!P.incomparable(c, e)) compatible = false;
    if (!compatible) continue;
    // Can chosen + {e} still be extended to a full-width antichain using
    // later elements only?
    std::vector<int> allowed;
    for (int f = e + 1; f < n; ++f) {
      if (!P.incomparable(e, f)) continue;
      bool ok = true;
      for (int c : chosen)
        if (!P.incomparable(c, f)) ok = false;
      if (ok) allowed.push_back(f);
    }
    if (static_cast<int>(chosen.size()) + 1 + poset_width(P, allowed) >= width)
      chosen.push_back(e);
  }
  return chosen;
}

std::optional<std::vector<int>> find_3antichain(const Poset& P) {
  const int n = P.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!P.incomparable(a, b)) continue;
      for (int c = b + 1; c < n; ++c)
        if (P.incomparable(a, c) && P.incomparable(b, c))
          return std::vector<int>{a, b, c};
    }
  return std::nullopt;
}

std::optional<RankFunction> rank_function(const Poset& P, UnrankedWitness* witness) {
  const int n = P.size();
  const auto& covers = P.covers();
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, signed cover)
  for (int c = 0; c < static_cast<int>(covers.size()); ++c) {
    adj[covers[c].first].push_back({covers[c].second, c + 1});
    adj[covers[c].second].push_back({covers[c].first, -(c + 1)});
  }
  std::vector<int> rho(n, 0);
  std::vector<bool> visited(n, false);
  // parent step that discovered each node, for witness reconstruction
  std::vector<std::pair<int, int>> parent(n, {-1, 0});
  auto walk_to_root = [&](int v) {
    std::vector<std::pair<int, int>> steps;
    while (parent[v].first != -1) {
      int signed_cover = parent[v].second;
      steps.push_back({std::abs(signed_cover) - 1, signed_cover > 0 ? +1 : -1});
      v = parent[v].first;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
  };
  for (int s = 0; s < n; ++s) {
    if (visited[s]) continue;
    std::queue<int> q;
    q.push(s);
    visited[s] = true;
    rho[s] = 0;
    std::vector<int> component{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto [v, signed_cover] : adj[u]) {
        int expect = rho[u] + (signed_cover > 0 ? 1 : -1);
        if (!visited[v]) {
          visited[v] = true;
          rho[v] = expect;
          parent[v] = {u, signed_cover};
          component.push_back(v);
          q.push(v);
        } else if (rho[v] != expect) {
          if (witness) {
            // Walk a: tree path to u extended by this cover.
            witness->walk_a = walk_to_root(u);
            witness->walk_a.push_back(
                {std::abs(signed_cover) - 1, signed_cover > 0 ? +1 : -1});
            witness->walk_b = walk_to_root(v);
          }
          return std::nullopt;
        }
      }
    }
    int low = rho[component.front()];
    for (int v : component) low = std::min(low, rho[v]);
    for (int v : component) rho[v] -= low;
  }
  // Poset rank: longest chain via DAG longest path over covers.
  std::vector<int> longest(n, 0);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return rho[a] < rho[b]; });
  int rank = 0;
  for (int u : order) {
    for (auto [v, signed_cover] : adj[u]) {
      if (signed_cover > 0) longest[v] = std::max(longest[v], longest[u] + 1);
    }
  }
  for (int i = 0; i < n; ++i) rank = std::max(rank, longest[i]);
  RankFunction rf;
  rf.rho = std::move(rho);
  rf.poset_rank = rank;
  return rf;
}

namespace {

void require_disjoint(const Poset& P, const Poset& Q) {
  for (const auto& e : Q.elements())
    if (P.has_label(e)) throw LabelCollision("label appears in both operands: " + e);
}

std::vector<std::pair<std::string, std::string>> cover_labels(const Poset& P) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : P.covers()) out.emplace_back(P.label(a), P.label(b));
  return out;
}

}  // namespace

std::string fresh_star_label(const std::vector<const Poset*>& posets) {
  for (int k = 1;; ++k) {
    std::string candidate = "*" + std::to_string(k);
    bool taken = false;
    for (const Poset* P : posets)
      if (P->has_label(candidate)) taken = true;
    if (!taken) return candidate;
  }
}

Poset reverse(const Poset& P) {
  const int n = P.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = P.leq_[j][i];
  return Poset::from_closure(P.elements_, std::move(leq));
}

Poset op_join(const Poset& P, const Poset& Q) {
  require_disjoint(P, Q);
  std::string star = fresh_star_label({&P, &Q});
  std::vector<std::string> els = P.elements();
  els.push_back(star);
  for (const auto& e : Q.elements()) els.push_back(e);
  auto rels = cover_labels(P);
  for (const auto& r : cover_labels(Q)) rels.push_back(r);
  for (const auto& e : P.elements()) rels.emplace_back(e, star);
  for (const auto& e : Q.elements()) rels.emplace_back(star, e);
  return Poset::build(std::move(els), rels);
}

Poset op_ordinal_sum(const Poset& P, const Poset& Q) {
  require_disjoint(P, Q);
  std::vector<std::string> els = P.elements();
  for (const auto& e : Q.elements()) els.push_back(e);
  auto rels = cover_labels(P);
  for (const auto& r : cover_labels(Q)) rels.push_back(r);
  for (const auto& x : P.elements())
    for (const auto& y : Q.elements()) rels.emplace_back(x, y);
  return Poset::build(std::move(els), rels);
}

Poset op_direct_sum(const Poset& P, const Poset& Q) {
  require_disjoint(P, Q);
  std::vector<std::string> els = P.elements();
  for (const auto& e : Q.elements()) els.push_back(e);
  auto rels = cover_labels(P);
  for (const auto& r : cover_labels(Q)) rels.push_back(r);
  return Poset::build(std::move(els), rels);
}

Poset op_partial_ordinal_sum(const Poset& P, const std::string& a, const Poset& Q,
                             const std::string& b) {
  require_disjoint(P, Q);
  if (!P.is_maximal(P.index_of(a)))
    throw NotMaximal("partial ordinal sum requires a maximal first anchor: " + a);
  if (!Q.is_minimal(Q.index_of(b)))
    throw NotMinimal("partial ordinal sum requires a minimal second anchor: " + b);
  std::vector<std::string> els = P.elements();
  for (const auto& e : Q.elements()) els.push_back(e);
  auto rels = cover_labels(P);
  for (const auto& r : cover_labels(Q)) rels.push_back(r);
  for (const auto& y : Q.elements()) rels.emplace_back(a, y);
  for (const auto& x : P.elements()) rels.emplace_back(x, b);
  return Poset::build(std::move(els), rels);
}

Poset split_cover(const Poset& P, const std::string& a, const std::string& b) {
  int ia = P.index_of(a), ib = P.index_of(b);
  bool found = false;
  for (const auto& [x, y] : P.covers())
    if (x == ia && y == ib) found = true;
  if (!found) throw NotACover("(" + a + ", " + b + ") is not a cover");
  std::string star = fresh_star_label({&P});
  std::vector<std::string> els = P.elements();
  els.push_back(star);
  std::vector<std::pair<std::string, std::string>> rels;
  for (const auto& [x, y] : P.covers()) {
    if (x == ia && y == ib) continue;
    rels.emplace_back(P.label(x), P.label(y));
  }
  rels.emplace_back(a, star);
  rels.emplace_back(star, b);
  return Poset::build(std::move(els), rels);
}

Poset split_extremal(const Poset& P, const std::string& c) {
  int ic = P.index_of(c);
  std::string star = fresh_star_label({&P});
  std::vector<std::string> els = P.elements();
  els.push_back(star);
  auto rels = cover_labels(P);
  if (P.is_maximal(ic)) {
    rels.emplace_back(c, star);
  } else if (P.is_minimal(ic)) {
    rels.emplace_back(star, c);
  } else {
    throw NotExtremal(c + " is neither maximal nor minimal");
  }
  return Poset::build(std::move(els), rels);
}

Poset poset_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::string> elements = j.at("elements").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> rels;
  const char* key = j.contains("relations") ? "relations" : "covers";
  if (j.contains(key)) {
    for (const auto& r : j.at(key)) {
      rels.emplace_back(r.at(0).get<std::string>(), r.at(1).get<std::string>());
    }
  }
  return Poset::build(std::move(elements), rels);
}

std::string poset_to_json(const Poset& P) {
  nlohmann::json j;
  j["elements"] = P.elements();
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [a, b] : P.covers())
    covers.push_back({P.label(a), P.label(b)});
  j["covers"] = covers;
  return j.dump();
}

std::string poset_to_dot(const Poset& P) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (const auto& e : P.elements()) os << "  \"" << e << "\";\n";
  for (const auto& [a, b] : P.covers())
    os << "  \"" << P.label(a) << "\" -> \"" << P.label(b) << "\";\n";
  os << "}\n";
  return os.str();
}

Poset chain_poset(int n) {
  std::vector<std::string> els;
  std::vector<std::pair<std::string, std::string>> rels;
  for (int i = 1; i <= n; ++i) els.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i) rels.emplace_back(std::to_string(i), std::to_string(i + 1));
  return Poset::build(std::move(els), rels);
}

Poset antichain_poset(int n) {
  std::vector<std::string> els;
  for (int i = 1; i <= n; ++i) els.push_back(std::to_string(i));
  return Poset::build(std::move(els), {});
}

}  // namespace ordslack
