#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bookem/graph.hpp"

namespace bookem {

// The complete expansion E_c(G): every source vertex v becomes a clique on
// d(v) vertices, one per incident edge; each source edge is realized by a
// single "link" edge between the two cliques. Carries full provenance.
struct ExpansionGraph {
  Graph graph;   // E_c(G)
  Graph source;  // G

  // expansion vertex -> (source vertex, source EdgeId)
  std::vector<std::pair<int, int>> vertex_origin;
  // source vertex -> its clique's expansion vertices, ordered by source EdgeId
  std::vector<std::vector<int>> clique_of;
  // source EdgeId -> the expansion EdgeId of the link realizing it
  std::vector<int> link_edge;

  enum class EdgeClass { clique, link };
  std::vector<EdgeClass> edge_class;  // per expansion EdgeId

  // The expansion vertex playing the role "v's endpoint of edge (v,u)".
  int slot(int v, int u) const {
    auto e = source.edge_id(v, u);
    if (!e) throw std::invalid_argument("slot: (v,u) is not a source edge");
    const auto& cl = clique_of[v];
    // clique_of[v] is ordered by incident EdgeId; binary search on that key
    int lo = 0, hi = static_cast<int>(cl.size()) - 1;
    while (lo <= hi) {
      int mid = (lo + hi) / 2;
      int key = vertex_origin[cl[mid]].second;
      if (key == *e) return cl[mid];
      if (key < *e) lo = mid + 1;
      else hi = mid - 1;
    }
    throw std::logic_error("slot: provenance maps are inconsistent");
  }
};

inline ExpansionGraph complete_expansion(const Graph& g) {
  ExpansionGraph x;
  x.source = g;
  x.clique_of.assign(g.n, {});
  // link endpoints per source edge, filled as clique vertices are numbered
  std::vector<std::array<int, 2>> ends(g.m(), {-1, -1});

  // Canonical numbering: cliques in source-vertex order, vertices within a
  // clique by incident EdgeId (neighbor lists are sorted, which matches).
  int next = 0;
  for (int v = 0; v < g.n; ++v) {
    for (int u : g.adj[v]) {
      int e = *g.edge_id(v, u);
      x.vertex_origin.emplace_back(v, e);
      x.clique_of[v].push_back(next);
      if (ends[e][0] < 0) ends[e][0] = next;
      else ends[e][1] = next;
      ++next;
    }
  }

  std::vector<std::pair<int, int>> ee;
  for (int v = 0; v < g.n; ++v) {
    const auto& cl = x.clique_of[v];
    for (size_t i = 0; i < cl.size(); ++i)
      for (size_t j = i + 1; j < cl.size(); ++j) ee.emplace_back(cl[i], cl[j]);
  }
  for (int e = 0; e < g.m(); ++e) ee.emplace_back(ends[e][0], ends[e][1]);

  x.graph = make_graph(next, std::move(ee));
  x.edge_class.assign(x.graph.m(), ExpansionGraph::EdgeClass::clique);
  x.link_edge.assign(g.m(), -1);
  for (int e = 0; e < g.m(); ++e) {
    int id = *x.graph.edge_id(ends[e][0], ends[e][1]);
    x.link_edge[e] = id;
    x.edge_class[id] = ExpansionGraph::EdgeClass::link;
  }
  return x;
}

// Executable property checks; returns human-readable violations (empty = pass).
// Works on possibly hand-mutated data, so everything is bounds-checked.
inline std::vector<std::string> check_expansion_properties(const ExpansionGraph& x) {
  std::vector<std::string> bad;
  const Graph& g = x.source;
  const Graph& eg = x.graph;

  if (static_cast<int>(x.clique_of.size()) != g.n) {
    bad.push_back("clause 1: clique_of does not cover every source vertex");
    return bad;
  }

  // clause 1: the cliques partition V(E_c(G)) and have the right sizes
  std::vector<int> owner(eg.n, -1);
  bool disjoint = true;
  for (int v = 0; v < g.n; ++v) {
    for (int xv : x.clique_of[v]) {
      if (xv < 0 || xv >= eg.n) {
        bad.push_back("clause 1: clique of " + std::to_string(v) +
                      " names a vertex outside the expansion graph");
        return bad;
      }
      if (owner[xv] != -1) disjoint = false;
      owner[xv] = v;
    }
    if (static_cast<int>(x.clique_of[v].size()) != g.degree(v))
      bad.push_back("clause 1: clique of " + std::to_string(v) +
                    " has size " + std::to_string(x.clique_of[v].size()) +
                    ", expected degree " + std::to_string(g.degree(v)));
  }
  if (!disjoint) bad.push_back("clause 1: cliques are not pairwise disjoint");
  for (int xv = 0; xv < eg.n; ++xv)
    if (owner[xv] == -1) {
      bad.push_back("clause 1: expansion vertex " + std::to_string(xv) +
                    " lies in no clique");
      break;
    }

  // clause 2: each source edge is realized by exactly one inter-clique edge
  if (static_cast<int>(x.link_edge.size()) != g.m()) {
    bad.push_back("clause 2: link_edge does not cover every source edge");
  } else {
    for (int e = 0; e < g.m(); ++e) {
      auto [u, v] = g.edges[e];
      int count = 0;
      int found = -1;
      for (int id = 0; id < eg.m(); ++id) {
        auto [a, b] = eg.edges[id];
        if (a >= static_cast<int>(owner.size()) || b >= static_cast<int>(owner.size())) continue;
        if ((owner[a] == u && owner[b] == v) || (owner[a] == v && owner[b] == u)) {
          ++count;
          found = id;
        }
      }
      if (count != 1)
        bad.push_back("clause 2: source edge " + std::to_string(e) + " is realized by " +
                      std::to_string(count) + " edges, expected 1");
      else if (x.link_edge[e] != found ||
               x.link_edge[e] >= static_cast<int>(x.edge_class.size()) ||
               x.edge_class[x.link_edge[e]] != ExpansionGraph::EdgeClass::link)
        bad.push_back("clause 2: link map for source edge " + std::to_string(e) +
                      " does not name the realizing edge");
    }
  }

  // clause 3: the cut around each clique has exactly d(v) edges
  for (int v = 0; v < g.n; ++v) {
    int cut = 0;
    for (int id = 0; id < eg.m(); ++id) {
      auto [a, b] = eg.edges[id];
      bool ina = owner[a] == v, inb = owner[b] == v;
      if (ina != inb) ++cut;
    }
    if (cut != g.degree(v))
      bad.push_back("clause 3: cut around clique of " + std::to_string(v) + " has " +
                    std::to_string(cut) + " edges, expected " + std::to_string(g.degree(v)));
  }

  // clause 4: no edge joins cliques of non-adjacent source vertices, and
  // every expansion vertex meets exactly one link edge
  for (int id = 0; id < eg.m(); ++id) {
    auto [a, b] = eg.edges[id];
    int u = owner[a], v = owner[b];
    if (u != v && u >= 0 && v >= 0 && !g.has_edge(u, v)) {
      bad.push_back("clause 4: edge between cliques of non-adjacent " + std::to_string(u) +
                    " and " + std::to_string(v));
    }
  }
  {
    std::vector<int> links_at(eg.n, 0);
    for (int id = 0; id < eg.m() && id < static_cast<int>(x.edge_class.size()); ++id)
      if (x.edge_class[id] == ExpansionGraph::EdgeClass::link) {
        ++links_at[eg.edges[id].first];
        ++links_at[eg.edges[id].second];
      }
    for (int xv = 0; xv < eg.n; ++xv)
      if (links_at[xv] != 1) {
        bad.push_back("clause 4: expansion vertex " + std::to_string(xv) + " meets " +
                      std::to_string(links_at[xv]) + " link edges, expected 1");
        break;
      }
  }

  return bad;
}

// H must be a labeled subgraph of G. Checks that E_c(H) maps into E_c(G)
// respecting provenance: clique vertices to clique vertices of the same
// source vertex, links to links.
inline bool subgraph_expansion_test(const Graph& h, const Graph& g) {
  if (h.n > g.n) throw std::invalid_argument("subgraph_expansion_test: |V(H)| > |V(G)|");
  for (auto [u, v] : h.edges)
    if (!g.has_edge(u, v))
      throw std::invalid_argument("subgraph_expansion_test: E(H) is not contained in E(G)");

  ExpansionGraph xh = complete_expansion(h);
  ExpansionGraph xg = complete_expansion(g);

  // (v, edge of H) -> (v, same edge seen from G's side)
  std::vector<int> image(xh.graph.n, -1);
  for (int xv = 0; xv < xh.graph.n; ++xv) {
    auto [v, e] = xh.vertex_origin[xv];
    auto [a, b] = h.edges[e];
    image[xv] = xg.slot(v, a == v ? b : a);
  }
  for (int id = 0; id < xh.graph.m(); ++id) {
    auto [x1, x2] = xh.graph.edges[id];
    auto gid = xg.graph.edge_id(image[x1], image[x2]);
    if (!gid) return false;
    if (xh.edge_class[id] != xg.edge_class[*gid]) return false;
  }
  return true;
}

}  // namespace bookem
