#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bookem/book.hpp"
#include "bookem/expansion.hpp"
#include "bookem/graph.hpp"
#include "bookem/planarity.hpp"

namespace bookem {

// A constructed embedding of a complete expansion, tagged with the page count
// the construction guarantees. The witness always validates cleanly and
// num_pages() <= claimed_pages; degenerate path collapses may use fewer.
struct ExpansionEmbedding {
  ExpansionGraph expansion;
  BookEmbedding emb;
  int claimed_pages = 0;
  std::string method;
};

// 0-based page of edge (a,b) in the zigzag decomposition of K_n: ((a+b) mod N)/2
// with N = n rounded up to even. Pages 0..ceil(n/2)-1; two edges of one page
// never alternate along the natural spine 0..n-1.
inline int kn_zigzag_page(int a, int b, int n) {
  int nn = n + (n & 1);
  return ((a + b) % nn) / 2;
}

namespace detail {

// Every embedder funnels its result through here: a dirty embedding or a page
// count above the claim is a construction bug, not an input error.
inline void require_constructed(const Graph& g, const BookEmbedding& emb, int claimed,
                                const char* method) {
  if (!validate_embedding(g, emb).clean())
    throw std::logic_error(std::string(method) +
                           ": construction produced an invalid embedding");
  if (emb.num_pages() > claimed)
    throw std::logic_error(std::string(method) +
                           ": construction exceeded its claimed page count");
}

}  // namespace detail

// Classic one-diagonal-per-page embedding of K_n on the natural spine:
// exactly ceil(n/2) pages for n >= 3. K_2 is a path; its edge rides the spine.
inline BookEmbedding embed_complete(int n) {
  if (n < 2) throw std::invalid_argument("embed_complete: n must be >= 2");
  Graph g = complete_graph(n);
  BookEmbedding emb;
  emb.spine.resize(n);
  for (int v = 0; v < n; ++v) emb.spine[v] = v;
  emb.page_of.assign(g.m(), 0);
  if (n > 2)
    for (int e = 0; e < g.m(); ++e) {
      auto [u, v] = g.edges[e];
      emb.page_of[e] = 1 + kn_zigzag_page(u, v, n);
    }
  detail::require_constructed(g, emb, n == 2 ? 0 : (n + 1) / 2, "embed_complete");
  return emb;
}

// Tree expansions, rooted at vertex 0. Spine: each vertex's slots appear as
// [slot to parent][slot to child c1][c1's subtree][slot to child c2][c2's
// subtree]... so every link edge is spine-consecutive (page 0) and each
// subtree nests strictly inside one gap between its parent's slots. Clique
// edges take zigzag pages on the relative slot order; same-page arcs from
// different cliques are nested or disjoint, so only the zigzag guarantee is
// needed. Exactly ceil(deg_max/2) pages once deg_max >= 3.
inline ExpansionEmbedding embed_expansion_tree(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("embed_expansion_tree: input is not a tree");
  ExpansionGraph xg = complete_expansion(t);
  int dmax = t.max_degree();
  int claimed = dmax <= 2 ? 0 : (dmax + 1) / 2;  // a tree with deg_max <= 2 is a path

  BookEmbedding emb;
  emb.page_of.assign(xg.graph.m(), 0);
  emb.spine.reserve(xg.graph.n);

  if (dmax <= 2) {
    // path: walk from one endpoint; every expansion edge is consecutive
    if (t.n >= 2) {
      int v = 0;
      while (t.degree(v) != 1) ++v;
      int prev = -1;
      while (true) {
        int next = -1;
        for (int u : t.adj[v])
          if (u != prev) next = u;
        if (prev >= 0) emb.spine.push_back(xg.slot(v, prev));
        if (next < 0) break;
        emb.spine.push_back(xg.slot(v, next));
        prev = v;
        v = next;
      }
    }
  } else {
    std::vector<int> parent(t.n, -1);
    struct Frame {
      int v;
      size_t ci = 0;
    };
    std::vector<Frame> stack{{0, 0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.ci == 0 && parent[f.v] >= 0) emb.spine.push_back(xg.slot(f.v, parent[f.v]));
      size_t deg = t.adj[f.v].size();
      while (f.ci < deg && t.adj[f.v][f.ci] == parent[f.v]) ++f.ci;
      if (f.ci < deg) {
        int c = t.adj[f.v][f.ci++];
        parent[c] = f.v;
        emb.spine.push_back(xg.slot(f.v, c));
        stack.push_back({c, 0});
      } else {
        stack.pop_back();
      }
    }
    for (int v = 0; v < t.n; ++v) {
      int d = t.degree(v);
      if (d < 2) continue;
      // relative slot order: parent first, then children ascending
      std::vector<int> rel;
      rel.reserve(d);
      if (parent[v] >= 0) rel.push_back(parent[v]);
      for (int u : t.adj[v])
        if (u != parent[v]) rel.push_back(u);
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          int e = xg.graph.edge_id(xg.slot(v, rel[i]), xg.slot(v, rel[j])).value();
          emb.page_of[e] = 1 + kn_zigzag_page(i, j, d);
        }
    }
  }

  detail::require_constructed(xg.graph, emb, claimed, "embed_expansion_tree");
  return {std::move(xg), std::move(emb), claimed, "tree"};
}

// Star expansions: the tree layout rooted at the hub specializes to the K_m
// core on zigzag pages with every pendant link on the spine. ceil(m/2) pages;
// m = 2 collapses to a path.
inline ExpansionEmbedding embed_expansion_star(int m) {
  if (m < 2) throw std::invalid_argument("embed_expansion_star: m must be >= 2");
  ExpansionEmbedding xe = embed_expansion_tree(star_graph(m));
  xe.claimed_pages = (m + 1) / 2;
  xe.method = "star";
  return xe;
}

// Moebius ladder expansions: 3 pages for every h >= 3. Vertices 0..h-1 form
// one rail, h..2h-1 the other; rungs join i and i+h, the rim closes with
// (h-1,h) and (0,2h-1). Spine: triangle blocks for 0..h-1 then 2h-1 down to
// h, three slots each, tabled so that all rail links plus the rung
// (h-1,2h-1) are spine-consecutive. Page 1 holds the rim closure (0,2h-1);
// page 2 the rim edge (h-1,h) plus each non-boundary-block outer chord; page
// 3 the remaining rungs (pairwise nested) and chords (each sharing a slot
// with, or nested inside, its block's rung arc).
inline ExpansionEmbedding embed_expansion_mobius(int h) {
  if (h < 3) throw std::invalid_argument("embed_expansion_mobius: h must be >= 3");
  Graph g = mobius_ladder(h);
  ExpansionGraph xg = complete_expansion(g);

  BookEmbedding emb;
  emb.spine.reserve(xg.graph.n);
  emb.spine.push_back(xg.slot(0, 2 * h - 1));
  emb.spine.push_back(xg.slot(0, h));
  emb.spine.push_back(xg.slot(0, 1));
  for (int v = 1; v <= h - 2; ++v) {
    emb.spine.push_back(xg.slot(v, v - 1));
    emb.spine.push_back(xg.slot(v, v + h));
    emb.spine.push_back(xg.slot(v, v + 1));
  }
  emb.spine.push_back(xg.slot(h - 1, h - 2));
  emb.spine.push_back(xg.slot(h - 1, h));
  emb.spine.push_back(xg.slot(h - 1, 2 * h - 1));
  emb.spine.push_back(xg.slot(2 * h - 1, h - 1));
  emb.spine.push_back(xg.slot(2 * h - 1, 0));
  emb.spine.push_back(xg.slot(2 * h - 1, 2 * h - 2));
  for (int v = 2 * h - 2; v >= h + 1; --v) {
    emb.spine.push_back(xg.slot(v, v + 1));
    emb.spine.push_back(xg.slot(v, v - h));
    emb.spine.push_back(xg.slot(v, v - 1));
  }
  emb.spine.push_back(xg.slot(h, h + 1));
  emb.spine.push_back(xg.slot(h, 0));
  emb.spine.push_back(xg.slot(h, h - 1));

  emb.page_of.assign(xg.graph.m(), 3);
  auto link_page = [&](int a, int b, int p) {
    emb.page_of[xg.link_edge[g.edge_id(a, b).value()]] = p;
  };
  auto chord_page = [&](int pos1, int pos2, int p) {
    emb.page_of[xg.graph.edge_id(emb.spine[pos1], emb.spine[pos2]).value()] = p;
  };
  for (int i = 0; i + 1 <= h - 1; ++i) link_page(i, i + 1, 0);      // one rail
  for (int v = h; v + 1 <= 2 * h - 1; ++v) link_page(v, v + 1, 0);  // other rail
  link_page(h - 1, 2 * h - 1, 0);                                   // rung at the fold
  link_page(0, 2 * h - 1, 1);                                       // rim closure
  link_page(h - 1, h, 2);                                           // other rim closure
  for (int i = 1; i <= h - 1; ++i) {
    chord_page(3 * (i - 1), 3 * (i - 1) + 2, 2);
    chord_page(6 * h - 3 * i, 6 * h - 3 * i + 2, 2);
  }

  detail::require_constructed(xg.graph, emb, 3, "embed_expansion_mobius");
  if (emb.num_pages() != 3)
    throw std::logic_error("embed_expansion_mobius: page count drifted from 3");
  return {std::move(xg), std::move(emb), 3, "mobius"};
}

// E_c(Petersen) on exactly 3 pages, shipped as fixed data: one graph does not
// warrant a runtime pattern. Blocks lie along the Hamiltonian path
// 0 1 2 3 4 9 6 8 5 7 with slots in canonical order; the page table was found
// once by exact search over that spine and is revalidated on every call.
inline ExpansionEmbedding embed_expansion_petersen() {
  ExpansionGraph xg = complete_expansion(petersen_graph());
  BookEmbedding emb;
  emb.spine = {0,  1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14,
               27, 28, 29, 18, 19, 20, 24, 25, 26, 15, 16, 17, 21, 22, 23};
  emb.page_of = {0, 1, 2, 0, 3, 1, 0, 1, 0, 3, 1, 0, 1, 0, 3,
                 2, 0, 3, 0, 1, 2, 0, 3, 0, 0, 0, 1, 0, 3, 2,
                 0, 1, 0, 3, 2, 0, 1, 0, 3, 0, 3, 0, 0, 3, 0};
  detail::require_constructed(xg.graph, emb, 3, "embed_expansion_petersen");
  if (emb.num_pages() != 3)
    throw std::logic_error("embed_expansion_petersen: page count drifted from 3");
  return {std::move(xg), std::move(emb), 3, "petersen"};
}

namespace detail {

// Zigzag chain value sequences; consecutive entries give the nested edge set.
inline std::vector<int> zz_up(int a, int b) {
  std::vector<int> s;
  bool low = true;
  while (a <= b) {
    s.push_back(low ? a++ : b--);
    low = !low;
  }
  return s;
}
inline std::vector<int> zz_down(int a, int b) {
  std::vector<int> s;
  bool high = true;
  while (a <= b) {
    s.push_back(high ? b-- : a++);
    high = !high;
  }
  return s;
}

}  // namespace detail

// Complete-graph expansions on exactly m pages for n = 2m and m+1 pages for
// n = 2m+1. Link edges follow per-page zigzag chains over whole blocks (the
// classic K_n page sets at block granularity), so each block holds at most
// two link-slots per page. Inside a block the d = n-1 slot positions carry
// the clique edges as the zigzag classes of K_{d} (mod D), and each page's
// link-slots are parked in a window of positions no chord of its class ever
// strictly covers: class q <= central-2 owns {2q+1, 2q+2}, the outermost
// class owns {0, d-1}, single slots sit at the remaining free spot. Per
// block, classes are matched to pages so every page's window fits its slot
// count; within a window, a left-going slot precedes a right-going one and
// same-side slots order by descending target, which is exactly what keeps
// same-page links nested across blocks.
inline ExpansionEmbedding embed_expansion_complete(int n) {
  if (n < 3) throw std::invalid_argument("embed_expansion_complete: n must be >= 3");
  Graph g = complete_graph(n);
  ExpansionGraph xg = complete_expansion(g);
  bool even = n % 2 == 0;
  int m = n / 2;
  int npages = even ? m : m + 1;
  int d = n - 1;             // slots per block
  int D = even ? n : n + 1;  // chord-class modulus; classes 0..D/2-1

  // page of each source edge, via 1-based zigzag chains over blocks
  std::vector<std::vector<int>> linkpage(n, std::vector<int>(n, 0));
  auto chain = [&](const std::vector<int>& seq, int page) {
    for (size_t i = 1; i < seq.size(); ++i) {
      int a = seq[i - 1] - 1, b = seq[i] - 1;
      linkpage[a][b] = linkpage[b][a] = page;
    }
  };
  for (int k = 1; k <= npages; ++k) {
    chain(detail::zz_up(2 * k - 1, n), k);
    chain(detail::zz_down(1, even ? 2 * k - 1 : 2 * k - 2), k);
  }

  BookEmbedding emb;
  emb.spine.reserve(xg.graph.n);
  emb.page_of.assign(xg.graph.m(), 0);

  for (int u = 0; u < n; ++u) {
    std::vector<std::vector<int>> tg(npages + 1);  // page -> link targets, ascending
    for (int w = 0; w < n; ++w)
      if (w != u && linkpage[u][w] > 0) tg[linkpage[u][w]].push_back(w);

    // match pages to chord classes so each page's slots land in its class's
    // interior-free window
    std::vector<int> cls(npages + 1, -1);
    if (even) {
      // one single-slot page per block; class m-2 has the single free spot
      std::vector<int> rest;
      for (int q = 0; q <= m - 3; ++q) rest.push_back(q);
      rest.push_back(m - 1);
      size_t r = 0;
      for (int k = 1; k <= npages; ++k)
        cls[k] = tg[k].size() == 1 ? m - 2 : rest[r++];
    } else if (u == n - 1) {
      // last block: two slots on every page but the last, which has none
      for (int k = 1; k <= m; ++k) cls[k] = k - 1;
      cls[m + 1] = m;
    } else {
      // two single-slot pages; classes m and m-1 keep the end positions free
      std::vector<int> singles;
      size_t r = 0;
      for (int k = 1; k <= npages; ++k)
        if (tg[k].size() == 1) singles.push_back(k);
        else cls[k] = static_cast<int>(r++);
      cls[singles[0]] = m;
      cls[singles[1]] = m - 1;
    }
    std::vector<int> page_of_class(D / 2, 0);
    for (int k = 1; k <= npages; ++k)
      if (cls[k] >= 0) page_of_class[cls[k]] = k;

    std::vector<int> at(d, -1);  // position -> link target
    for (int k = 1; k <= npages; ++k) {
      if (tg[k].empty()) continue;
      int q = cls[k];
      if (tg[k].size() == 1) {
        at[even ? d - 2 : (q == m ? 0 : d - 1)] = tg[k][0];
      } else {
        int lo = q == m - 1 ? 0 : 2 * q + 1;
        int hi = q == m - 1 ? d - 1 : 2 * q + 2;
        int w1 = tg[k][0], w2 = tg[k][1];
        // left-going before right-going; same side: larger target first
        if (w1 < u && u < w2) {
          at[lo] = w1;
          at[hi] = w2;
        } else {
          at[lo] = w2;
          at[hi] = w1;
        }
      }
    }

    for (int pos = 0; pos < d; ++pos) emb.spine.push_back(xg.slot(u, at[pos]));
    for (int x = 0; x < d; ++x)
      for (int y = x + 1; y < d; ++y) {
        int e = xg.graph.edge_id(xg.slot(u, at[x]), xg.slot(u, at[y])).value();
        emb.page_of[e] = page_of_class[((x + y) % D) / 2];
      }
  }
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    emb.page_of[xg.link_edge[e]] = linkpage[u][v];
  }

  detail::require_constructed(xg.graph, emb, npages, "embed_expansion_complete");
  if (emb.num_pages() != npages)
    throw std::logic_error("embed_expansion_complete: page count drifted");
  return {std::move(xg), std::move(emb), npages, "expansion-complete"};
}

// Expand an arbitrary clean embedding of G into one of E_c(G): blocks of
// d(v) slots replace spine vertices, links keep their source edge's page,
// clique edges go to fresh zigzag pages. Within a block, slots group by
// page; inside a page left-going slots precede right-going ones, left-going
// nearest target first, right-going farthest target first, which keeps
// same-page link arcs nested or disjoint exactly as their source edges were.
// Slots of spine-consecutive (page-0) source edges sit at the block's outer
// ends so their links stay spine-consecutive. At most t + ceil(deg_max/2)
// pages.
inline ExpansionEmbedding expand_embedding(const Graph& g, const BookEmbedding& emb_g) {
  if (!validate_embedding(g, emb_g).clean())
    throw std::invalid_argument("expand_embedding: invalid source embedding");
  ExpansionGraph xg = complete_expansion(g);
  int dmax = g.max_degree();
  int t = emb_g.num_pages();
  int claimed = t + (dmax + 1) / 2;

  BookEmbedding emb;
  emb.page_of.assign(xg.graph.m(), 0);
  emb.spine.reserve(xg.graph.n);
  std::vector<int> srcpos = spine_positions(emb_g);

  if (t == 0) {
    // every source edge rides the spine, so components are spine intervals
    // and E_c(G) is again a linear forest laid out the same way
    for (int sp = 0; sp < g.n; ++sp) {
      int v = emb_g.spine[sp];
      int left = -1, right = -1;
      for (int u : g.adj[v]) (srcpos[u] < sp ? left : right) = u;
      if (left >= 0) emb.spine.push_back(xg.slot(v, left));
      if (right >= 0) emb.spine.push_back(xg.slot(v, right));
    }
    detail::require_constructed(xg.graph, emb, claimed, "expand_embedding");
    return {std::move(xg), std::move(emb), claimed, "general"};
  }

  int maxpage = 0;
  for (int p : emb_g.page_of) maxpage = std::max(maxpage, p);

  for (int sp = 0; sp < g.n; ++sp) {
    int v = emb_g.spine[sp];
    int left0 = -1, right0 = -1;  // spine-consecutive neighbours
    std::vector<std::vector<int>> lefts(maxpage + 1), rights(maxpage + 1);
    for (int u : g.adj[v]) {
      int pg = emb_g.page_of[g.edge_id(v, u).value()];
      if (pg == 0)
        (srcpos[u] < sp ? left0 : right0) = u;
      else
        (srcpos[u] < sp ? lefts : rights)[pg].push_back(u);
    }
    std::vector<int> rel;
    rel.reserve(g.degree(v));
    if (left0 >= 0) rel.push_back(left0);
    auto by_pos_desc = [&](int x, int y) { return srcpos[x] > srcpos[y]; };
    for (int p = 1; p <= maxpage; ++p) {
      std::sort(lefts[p].begin(), lefts[p].end(), by_pos_desc);
      std::sort(rights[p].begin(), rights[p].end(), by_pos_desc);
      rel.insert(rel.end(), lefts[p].begin(), lefts[p].end());
      rel.insert(rel.end(), rights[p].begin(), rights[p].end());
    }
    if (right0 >= 0) rel.push_back(right0);

    int d = static_cast<int>(rel.size());
    for (int u : rel) emb.spine.push_back(xg.slot(v, u));
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        int e = xg.graph.edge_id(xg.slot(v, rel[i]), xg.slot(v, rel[j])).value();
        emb.page_of[e] = maxpage + 1 + kn_zigzag_page(i, j, d);
      }
  }
  for (int e = 0; e < g.m(); ++e) emb.page_of[xg.link_edge[e]] = emb_g.page_of[e];

  detail::require_constructed(xg.graph, emb, claimed, "expand_embedding");
  return {std::move(xg), std::move(emb), claimed, "general"};
}

// Certified lower bounds on pn(E_c(G)): ceil(deg_max/2) from the clique
// blocks, raised to 3 when the expansion itself is nonplanar; paths are 0.
struct ExpansionLowerBound {
  int bound = 0;
  std::string reason;  // "clique" | "nonplanar" | "path"
};

inline ExpansionLowerBound expansion_lower_bound(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("expansion_lower_bound: graph must be connected");
  if (is_path_graph(g)) return {0, "path"};
  int b = (g.max_degree() + 1) / 2;
  if (b < 3 && !is_planar(complete_expansion(g).graph)) return {3, "nonplanar"};
  return {b, "clique"};
}

}  // namespace bookem
