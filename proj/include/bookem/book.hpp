#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bookem/graph.hpp"

namespace bookem {

// Spine order plus a page per edge. Page 0 is the spine itself: only edges
// joining consecutive spine positions may live there, and they are free -
// num_pages counts the distinct pages >= 1.
struct BookEmbedding {
  std::vector<int> spine;    // spine[i] = vertex at position i
  std::vector<int> page_of;  // EdgeId -> page

  int num_pages() const {
    std::set<int> pages;
    for (int p : page_of)
      if (p >= 1) pages.insert(p);
    return static_cast<int>(pages.size());
  }
};

// pos[vertex] = spine position
inline std::vector<int> spine_positions(const BookEmbedding& emb) {
  std::vector<int> pos(emb.spine.size());
  for (size_t i = 0; i < emb.spine.size(); ++i) pos[emb.spine[i]] = static_cast<int>(i);
  return pos;
}

// Same-page edges cross iff their endpoints alternate along the spine.
// Edges sharing an endpoint never cross.
inline bool edges_cross(const std::vector<int>& pos, std::pair<int, int> e1,
                        std::pair<int, int> e2) {
  auto [a, b] = e1;
  auto [c, d] = e2;
  if (a == c || a == d || b == c || b == d) return false;
  int a1 = std::min(pos[a], pos[b]), b1 = std::max(pos[a], pos[b]);
  int c1 = std::min(pos[c], pos[d]), d1 = std::max(pos[c], pos[d]);
  return (a1 < c1 && c1 < b1 && b1 < d1) || (c1 < a1 && a1 < d1 && d1 < b1);
}

struct Crossing {
  int e1, e2;  // EdgeIds, e1 < e2
  int page;
};

struct ValidationReport {
  std::vector<std::string> structural;
  std::vector<Crossing> crossings;
  bool clean() const { return structural.empty() && crossings.empty(); }
};

inline ValidationReport validate_embedding(const Graph& g, const BookEmbedding& emb) {
  ValidationReport rep;

  if (static_cast<int>(emb.spine.size()) != g.n) {
    rep.structural.push_back("spine has " + std::to_string(emb.spine.size()) +
                             " entries, graph has " + std::to_string(g.n) + " vertices");
    return rep;
  }
  std::vector<char> seen(g.n, 0);
  for (int v : emb.spine) {
    if (v < 0 || v >= g.n || seen[v]) {
      rep.structural.push_back("spine is not a permutation of the vertices");
      return rep;
    }
    seen[v] = 1;
  }
  if (static_cast<int>(emb.page_of.size()) != g.m()) {
    rep.structural.push_back("page assignment covers " + std::to_string(emb.page_of.size()) +
                             " edges, graph has " + std::to_string(g.m()));
    return rep;
  }

  auto pos = spine_positions(emb);
  for (int e = 0; e < g.m(); ++e) {
    if (emb.page_of[e] < 0) {
      rep.structural.push_back("edge " + std::to_string(e) + " has negative page");
      continue;
    }
    if (emb.page_of[e] == 0) {
      auto [u, v] = g.edges[e];
      if (std::abs(pos[u] - pos[v]) != 1)
        rep.structural.push_back("edge " + std::to_string(g.edges[e].first) + "-" +
                                 std::to_string(g.edges[e].second) +
                                 " on page 0 is not spine-consecutive");
    }
  }

  for (int e1 = 0; e1 < g.m(); ++e1)
    for (int e2 = e1 + 1; e2 < g.m(); ++e2) {
      if (emb.page_of[e1] != emb.page_of[e2] || emb.page_of[e1] < 1) continue;
      if (edges_cross(pos, g.edges[e1], g.edges[e2]))
        rep.crossings.push_back({e1, e2, emb.page_of[e1]});
    }

  return rep;
}

// Graph on EdgeIds, adjacent iff the edges cross under the given spine.
inline Graph conflict_graph(const Graph& g, const std::vector<int>& spine) {
  std::vector<int> pos(g.n);
  for (size_t i = 0; i < spine.size(); ++i) pos[spine[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> conf;
  for (int e1 = 0; e1 < g.m(); ++e1)
    for (int e2 = e1 + 1; e2 < g.m(); ++e2)
      if (edges_cross(pos, g.edges[e1], g.edges[e2])) conf.emplace_back(e1, e2);
  return make_graph(g.m(), std::move(conf));
}

// Greedy paging: spine-consecutive edges to page 0; the rest scanned by
// (left endpoint ascending, right endpoint descending) - nested chains then
// land on a common page - each to the lowest page >= 1 with no conflict.
inline BookEmbedding first_fit_pages(const Graph& g, const std::vector<int>& spine) {
  BookEmbedding emb;
  emb.spine = spine;
  emb.page_of.assign(g.m(), 0);

  std::vector<int> pos(g.n);
  for (size_t i = 0; i < spine.size(); ++i) pos[spine[i]] = static_cast<int>(i);

  std::vector<int> arcs;
  for (int e = 0; e < g.m(); ++e)
    if (std::abs(pos[g.edges[e].first] - pos[g.edges[e].second]) != 1) arcs.push_back(e);
  std::sort(arcs.begin(), arcs.end(), [&](int e1, int e2) {
    auto span = [&](int e) {
      int a = pos[g.edges[e].first], b = pos[g.edges[e].second];
      return std::make_pair(std::min(a, b), -std::max(a, b));
    };
    auto s1 = span(e1), s2 = span(e2);
    if (s1 != s2) return s1 < s2;
    return e1 < e2;
  });

  std::vector<int> assigned;
  for (int e : arcs) {
    int page = 1;
    for (;;) {
      bool ok = true;
      for (int f : assigned)
        if (emb.page_of[f] == page && edges_cross(pos, g.edges[e], g.edges[f])) {
          ok = false;
          break;
        }
      if (ok) break;
      ++page;
    }
    emb.page_of[e] = page;
    assigned.push_back(e);
  }
  return emb;
}

namespace detail {

// Exact k-colorability of a conflict graph given as adjacency lists.
// Canonical color classes: a node may open at most one fresh class.
inline bool color_exact(const std::vector<std::vector<int>>& adj,
                        const std::vector<int>& order, int k, std::vector<int>& color) {
  int nn = static_cast<int>(order.size());
  // fast paths: k <= 1 trivial, k == 2 is bipartiteness
  if (k <= 0) {
    for (const auto& a : adj)
      if (!a.empty()) return false;
    for (int v : order) color[v] = 0;
    return true;
  }
  if (k == 1) {
    for (int v : order)
      for (int u : adj[v])
        if (u != v) return false;
    for (int v : order) color[v] = 0;
    return true;
  }
  if (k == 2) {
    std::vector<int> c(adj.size(), -1);
    for (int s : order) {
      if (c[s] != -1) continue;
      c[s] = 0;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v]) {
          if (c[u] == -1) {
            c[u] = 1 - c[v];
            stack.push_back(u);
          } else if (c[u] == c[v]) {
            return false;
          }
        }
      }
    }
    for (int v : order) color[v] = c[v];
    return true;
  }

  std::vector<int> c(adj.size(), -1);
  // recursive backtracking over `order`
  auto rec = [&](auto&& self, int idx, int opened) -> bool {
    if (idx == nn) return true;
    int v = order[idx];
    unsigned used = 0;
    for (int u : adj[v])
      if (c[u] >= 0) used |= 1u << c[u];
    int limit = std::min(k, opened + 1);
    for (int col = 0; col < limit; ++col) {
      if (used & (1u << col)) continue;
      c[v] = col;
      if (self(self, idx + 1, std::max(opened, col + 1))) return true;
      c[v] = -1;
    }
    return false;
  };
  if (!rec(rec, 0, 0)) return false;
  for (int v : order) color[v] = c[v];
  return true;
}

// Greedy clique in the conflict graph, scanning nodes in the given order.
inline int greedy_clique_bound(const std::vector<std::vector<int>>& adj,
                               const std::vector<int>& order) {
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int u : clique)
      if (std::find(adj[v].begin(), adj[v].end(), u) == adj[v].end()) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }
  return static_cast<int>(clique.size());
}

}  // namespace detail

// Exact minimum page count for a fixed spine: branch-and-bound coloring of
// the conflict graph, nodes in degree-descending order, canonical classes.
// Returns nothing if the minimum exceeds page_budget.
inline std::optional<std::pair<int, BookEmbedding>> min_pages_fixed_spine(
    const Graph& g, const std::vector<int>& spine, int page_budget) {
  if (page_budget < 0) throw std::invalid_argument("min_pages_fixed_spine: negative budget");

  std::vector<int> pos(g.n);
  for (size_t i = 0; i < spine.size(); ++i) pos[spine[i]] = static_cast<int>(i);

  std::vector<int> arcs;  // non-consecutive edges: these need pages >= 1
  for (int e = 0; e < g.m(); ++e)
    if (std::abs(pos[g.edges[e].first] - pos[g.edges[e].second]) != 1) arcs.push_back(e);

  BookEmbedding emb;
  emb.spine = spine;
  emb.page_of.assign(g.m(), 0);
  if (arcs.empty()) return std::make_pair(0, emb);
  if (page_budget == 0) return std::nullopt;

  int na = static_cast<int>(arcs.size());
  std::vector<std::vector<int>> adj(na);
  for (int i = 0; i < na; ++i)
    for (int j = i + 1; j < na; ++j)
      if (edges_cross(pos, g.edges[arcs[i]], g.edges[arcs[j]])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }

  std::vector<int> order(na);
  for (int i = 0; i < na; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (adj[a].size() != adj[b].size()) return adj[a].size() > adj[b].size();
    return a < b;
  });

  int start = std::max(1, detail::greedy_clique_bound(adj, order));
  std::vector<int> color(na, -1);
  for (int k = start; k <= page_budget; ++k) {
    if (!detail::color_exact(adj, order, k, color)) continue;
    // renumber classes by first use in EdgeId order so output is canonical
    std::vector<int> remap(k, 0);
    int next = 0;
    for (int i = 0; i < na; ++i)
      if (!remap[color[i]]) remap[color[i]] = ++next;
    for (int i = 0; i < na; ++i) emb.page_of[arcs[i]] = remap[color[i]];
    return std::make_pair(k, emb);
  }
  return std::nullopt;
}

}  // namespace bookem
