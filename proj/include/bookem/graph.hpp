#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bookem {

// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
// (u < v) in lexicographic order; an edge's index in `edges` is its EdgeId.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  int max_degree() const {
    int d = 0;
    for (const auto& nb : adj) d = std::max(d, static_cast<int>(nb.size()));
    return d;
  }

  std::optional<int> edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end() || *it != std::make_pair(u, v)) return std::nullopt;
    return static_cast<int>(it - edges.begin());
  }

  bool has_edge(int u, int v) const { return edge_id(u, v).has_value(); }
};

// Canonical constructor: rejects self-loops and out-of-range endpoints,
// normalizes orientation, sorts, and collapses duplicates silently.
inline Graph make_graph(int n, std::vector<std::pair<int, int>> edge_list) {
  if (n < 0) throw std::invalid_argument("make_graph: negative vertex count");
  for (auto& [u, v] : edge_list) {
    if (u == v)
      throw std::invalid_argument("make_graph: self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("make_graph: edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());

  Graph g;
  g.n = n;
  g.edges = std::move(edge_list);
  g.adj.assign(n, {});
  // Lexicographic edge order appends each vertex's smaller neighbors first,
  // then larger ones, both ascending - so neighbor lists come out sorted.
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  return g;
}

inline Graph path_graph(int n) {
  if (n < 2) throw std::invalid_argument("path_graph: need n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return make_graph(n, std::move(e));
}

// Star with m leaves: center is vertex 0, leaves 1..m.
inline Graph star_graph(int m) {
  if (m < 1) throw std::invalid_argument("star_graph: need m >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= m; ++i) e.emplace_back(0, i);
  return make_graph(m + 1, std::move(e));
}

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: need n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make_graph(n, std::move(e));
}

inline Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite_graph: need a,b >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return make_graph(a + b, std::move(e));
}

// Cycle v_0..v_{2h-1} plus the h antipodal rungs (v_i, v_{i+h}).
inline Graph mobius_ladder(int h) {
  if (h < 3) throw std::invalid_argument("mobius_ladder: need h >= 3");
  int n = 2 * h;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  for (int i = 0; i < h; ++i) e.emplace_back(i, i + h);
  return make_graph(n, std::move(e));
}

// Outer cycle 0..4, inner pentagram 5..9, spokes (i, 5+i).
inline Graph petersen_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  return make_graph(10, std::move(e));
}

// parents[i] is the parent of vertex i+1 and must satisfy parents[i] <= i.
inline Graph tree_from_parents(const std::vector<int>& parents) {
  int n = static_cast<int>(parents.size()) + 1;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n - 1; ++i) {
    if (parents[i] < 0 || parents[i] > i)
      throw std::invalid_argument("tree_from_parents: parent of vertex " +
                                  std::to_string(i + 1) + " must precede it");
    e.emplace_back(parents[i], i + 1);
  }
  return make_graph(n, std::move(e));
}

inline Graph family_graph(const std::string& kind, const std::vector<int>& params) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("family_graph: " + kind + " expects " + std::to_string(k) +
                                  " parameter(s)");
  };
  if (kind == "path") { want(1); return path_graph(params[0]); }
  if (kind == "cycle") { want(1); return cycle_graph(params[0]); }
  if (kind == "star") { want(1); return star_graph(params[0]); }
  if (kind == "complete") { want(1); return complete_graph(params[0]); }
  if (kind == "complete_bipartite") { want(2); return complete_bipartite_graph(params[0], params[1]); }
  if (kind == "mobius_ladder") { want(1); return mobius_ladder(params[0]); }
  if (kind == "petersen") { want(0); return petersen_graph(); }
  if (kind == "tree_from_parents") return tree_from_parents(params);
  throw std::invalid_argument("family_graph: unknown family '" + kind + "'");
}

inline bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == g.n;
}

inline bool is_tree(const Graph& g) { return g.m() == g.n - 1 && is_connected(g); }

inline bool is_path_graph(const Graph& g) {
  return g.n >= 1 && is_tree(g) && g.max_degree() <= 2;
}

inline bool is_cycle_graph(const Graph& g) {
  if (g.n < 3 || g.m() != g.n) return false;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

// Union of vertex-disjoint paths (isolated vertices allowed).
inline bool is_linear_forest(const Graph& g) {
  if (g.max_degree() > 2) return false;
  // acyclic iff every component has |E| = |V| - 1; equivalently no cycle
  std::vector<int> parent(g.n, -2);
  for (int s = 0; s < g.n; ++s) {
    if (parent[s] != -2) continue;
    parent[s] = -1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.adj[v]) {
        if (u == parent[v]) continue;
        if (parent[u] != -2) return false;  // back edge: cycle
        parent[u] = v;
        stack.push_back(u);
      }
    }
  }
  return true;
}

}  // namespace bookem
