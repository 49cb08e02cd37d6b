#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "bookem/book.hpp"
#include "bookem/graph.hpp"

using namespace bookem;

namespace {

std::vector<int> natural_spine(int n) {
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  return s;
}

Graph random_connected(std::mt19937& rng, int n, int extra) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(static_cast<int>(rng() % i), i);
  for (int k = 0; k < extra; ++k) {
    int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u != v) e.emplace_back(u, v);
  }
  return make_graph(n, std::move(e));
}

// independent oracle: minimum page count for a fixed spine by exhaustive
// backtracking over page assignments of the non-consecutive edges
int oracle_min_pages(const Graph& g, const std::vector<int>& spine, int kmax) {
  std::vector<int> pos(g.n);
  for (size_t i = 0; i < spine.size(); ++i) pos[spine[i]] = static_cast<int>(i);
  std::vector<int> arcs;
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    if (std::abs(pos[u] - pos[v]) != 1) arcs.push_back(e);
  }
  if (arcs.empty()) return 0;
  auto alternate = [&](int e, int f) {
    auto [a, b] = g.edges[e];
    auto [c, d] = g.edges[f];
    if (a == c || a == d || b == c || b == d) return false;
    int a1 = std::min(pos[a], pos[b]), b1 = std::max(pos[a], pos[b]);
    int c1 = std::min(pos[c], pos[d]), d1 = std::max(pos[c], pos[d]);
    return (a1 < c1 && c1 < b1 && b1 < d1) || (c1 < a1 && a1 < d1 && d1 < b1);
  };
  for (int k = 1; k <= kmax; ++k) {
    std::vector<int> page(arcs.size(), 0);
    auto rec = [&](auto&& self, size_t idx) -> bool {
      if (idx == arcs.size()) return true;
      for (int p = 1; p <= k; ++p) {
        bool ok = true;
        for (size_t j = 0; j < idx; ++j)
          if (page[j] == p && alternate(arcs[idx], arcs[j])) { ok = false; break; }
        if (!ok) continue;
        page[idx] = p;
        if (self(self, idx + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 0)) return k;
  }
  return kmax + 1;
}

}  // namespace

TEST_CASE("edges_cross follows the alternation rule") {
  std::vector<int> pos{0, 1, 2, 3};  // spine 0,1,2,3
  REQUIRE(edges_cross(pos, {0, 2}, {1, 3}));
  REQUIRE(!edges_cross(pos, {0, 3}, {1, 2}));  // nested
  REQUIRE(!edges_cross(pos, {0, 1}, {2, 3}));  // disjoint
  REQUIRE(!edges_cross(pos, {0, 2}, {2, 3}));  // shared endpoint
}

TEST_CASE("edges_cross is symmetric and reversal-invariant") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[i] = i;
    std::shuffle(pos.begin(), pos.end(), rng);
    std::vector<int> rev(n);
    for (int i = 0; i < n; ++i) rev[i] = n - 1 - pos[i];
    int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    int c = static_cast<int>(rng() % n), d = static_cast<int>(rng() % n);
    if (a == b || c == d) continue;
    REQUIRE(edges_cross(pos, {a, b}, {c, d}) == edges_cross(pos, {c, d}, {a, b}));
    REQUIRE(edges_cross(pos, {a, b}, {c, d}) == edges_cross(rev, {a, b}, {c, d}));
  }
}

TEST_CASE("validate_embedding on the worked examples") {
  SECTION("C_4 with the closing edge on page 1 is clean") {
    Graph c4 = cycle_graph(4);
    BookEmbedding emb;
    emb.spine = natural_spine(4);
    emb.page_of.assign(4, 0);
    emb.page_of[*c4.edge_id(0, 3)] = 1;
    auto rep = validate_embedding(c4, emb);
    REQUIRE(rep.clean());
    REQUIRE(emb.num_pages() == 1);
  }

  SECTION("K_4 all on one page has exactly the (0,2)x(1,3) crossing") {
    Graph k4 = complete_graph(4);
    BookEmbedding emb;
    emb.spine = natural_spine(4);
    emb.page_of.assign(6, 1);
    auto rep = validate_embedding(k4, emb);
    REQUIRE(rep.structural.empty());
    REQUIRE(rep.crossings.size() == 1);
    REQUIRE(rep.crossings[0].e1 == *k4.edge_id(0, 2));
    REQUIRE(rep.crossings[0].e2 == *k4.edge_id(1, 3));
    REQUIRE(rep.crossings[0].page == 1);
  }

  SECTION("non-consecutive edge on page 0 is a structural violation") {
    Graph g = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    BookEmbedding emb;
    emb.spine = natural_spine(3);
    emb.page_of.assign(3, 0);  // (0,2) spans two positions
    auto rep = validate_embedding(g, emb);
    REQUIRE(!rep.structural.empty());
  }

  SECTION("edge set mismatch and bad spine are structural") {
    Graph g = path_graph(3);
    BookEmbedding emb;
    emb.spine = natural_spine(3);
    emb.page_of.assign(1, 0);
    REQUIRE(!validate_embedding(g, emb).structural.empty());
    emb.page_of.assign(2, 0);
    emb.spine = {0, 0, 2};
    REQUIRE(!validate_embedding(g, emb).structural.empty());
  }
}

TEST_CASE("num_pages counts distinct pages >= 1") {
  BookEmbedding emb;
  emb.page_of = {0, 2, 2, 7, 0};
  REQUIRE(emb.num_pages() == 2);
  emb.page_of = {0, 0};
  REQUIRE(emb.num_pages() == 0);
}

TEST_CASE("conflict_graph on the worked examples") {
  Graph k4 = complete_graph(4);
  Graph cg = conflict_graph(k4, natural_spine(4));
  REQUIRE(cg.n == 6);
  REQUIRE(cg.m() == 1);
  REQUIRE(cg.has_edge(*k4.edge_id(0, 2), *k4.edge_id(1, 3)));

  Graph c5 = cycle_graph(5);
  Graph cg5 = conflict_graph(c5, natural_spine(5));
  REQUIRE(cg5.n == 5);
  REQUIRE(cg5.m() == 0);
}

TEST_CASE("first_fit_pages basics") {
  Graph p6 = path_graph(6);
  REQUIRE(first_fit_pages(p6, natural_spine(6)).num_pages() == 0);

  Graph c6 = cycle_graph(6);
  REQUIRE(first_fit_pages(c6, natural_spine(6)).num_pages() == 1);

  Graph k6 = complete_graph(6);
  BookEmbedding ff = first_fit_pages(k6, natural_spine(6));
  REQUIRE(validate_embedding(k6, ff).clean());
  REQUIRE(ff.num_pages() <= 5);
  auto exact = min_pages_fixed_spine(k6, natural_spine(6), 10);
  REQUIRE(exact);
  REQUIRE(ff.num_pages() >= exact->first);
}

TEST_CASE("first_fit_pages is always legal") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_connected(rng, 3 + static_cast<int>(rng() % 8), static_cast<int>(rng() % 10));
    std::vector<int> spine = natural_spine(g.n);
    std::shuffle(spine.begin(), spine.end(), rng);
    BookEmbedding emb = first_fit_pages(g, spine);
    REQUIRE(validate_embedding(g, emb).clean());
  }
}

TEST_CASE("min_pages_fixed_spine on the worked examples") {
  Graph k4 = complete_graph(4);
  auto r = min_pages_fixed_spine(k4, natural_spine(4), 6);
  REQUIRE(r);
  REQUIRE(r->first == 2);
  REQUIRE(validate_embedding(k4, r->second).clean());
  REQUIRE(r->second.num_pages() == 2);

  Graph c7 = cycle_graph(7);
  auto rc = min_pages_fixed_spine(c7, natural_spine(7), 3);
  REQUIRE(rc);
  REQUIRE(rc->first == 1);

  Graph k6 = complete_graph(6);
  auto rk = min_pages_fixed_spine(k6, natural_spine(6), 15);
  REQUIRE(rk);
  REQUIRE(rk->first == 3);
  REQUIRE(validate_embedding(k6, rk->second).clean());

  // distinguished infeasible-within-budget result
  REQUIRE(!min_pages_fixed_spine(k6, natural_spine(6), 2).has_value());
  auto k5 = complete_graph(5);
  REQUIRE(!min_pages_fixed_spine(k5, natural_spine(5), 0).has_value());
}

TEST_CASE("min_pages_fixed_spine matches the exhaustive oracle") {
  std::mt19937 rng(29);
  int done = 0;
  for (int trial = 0; trial < 120 && done < 60; ++trial) {
    Graph g = random_connected(rng, 3 + static_cast<int>(rng() % 5), static_cast<int>(rng() % 6));
    if (g.m() > 8) continue;
    std::vector<int> spine = natural_spine(g.n);
    std::shuffle(spine.begin(), spine.end(), rng);
    int want = oracle_min_pages(g, spine, 4);
    auto got = min_pages_fixed_spine(g, spine, 4);
    if (want > 4) {
      REQUIRE(!got.has_value());
    } else {
      REQUIRE(got);
      REQUIRE(got->first == want);
      REQUIRE(validate_embedding(g, got->second).clean());
      REQUIRE(got->second.num_pages() == want);
    }
    ++done;
  }
  REQUIRE(done == 60);
}
